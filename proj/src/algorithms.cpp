#include "jointslab/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "jointslab/linalg.hpp"
#include "jointslab/numeric.hpp"
#include "jointslab/parallel.hpp"

namespace jointslab {

namespace {

// Line minimizing |l ∩ K| with no precondition checks; ties go to the
// lowest index.
std::pair<std::size_t, std::size_t> lightest_line(const LineCollection& c,
                                                  const std::set<Point>& K) {
    std::size_t best = 0;
    std::size_t best_count = K.size() + 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::size_t count = 0;
        for (const Point& x : K)
            if (c[i].contains(x)) ++count;
        if (count < best_count) {
            best = i;
            best_count = count;
        }
    }
    return {best, best_count};
}

}  // namespace

std::pair<std::size_t, std::size_t> extract_light_line(const LineCollection& c,
                                                       const std::set<Point>& K) {
    if (K.empty()) throw ContractError("light-line extraction needs a nonempty point set");
    if (c.empty()) throw ContractError("light-line extraction needs a nonempty collection");
    std::set<Point> J = joint_points(c);
    for (const Point& x : K)
        if (!J.count(x))
            throw ContractError("point " + x.str() + " is not a joint of the collection");
    auto [index, count] = lightest_line(c, K);
    long long bound = dstar(c.dim(), BigInt(K.size()));
    if (static_cast<long long>(count) > bound)
        throw ContractError("lightest line meets " + std::to_string(count) +
                            " points, above the counting bound " + std::to_string(bound));
    return {index, count};
}

PeelingTrace peel(const LineCollection& c) {
    PeelingTrace trace;
    std::set<Point> K = joint_points(c);
    trace.initial_joint_count = K.size();
    trace.part_bound = dstar(c.dim(), BigInt(K.size()));
    LineCollection current = c;
    // original[i] = index of current line i in the input collection.
    std::vector<std::size_t> original(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) original[i] = i;
    while (!K.empty()) {
        auto [index, count] = extract_light_line(current, K);
        (void)count;
        std::vector<Point> extracted = points_on_line_in_set(current[index], K);
        for (const Point& x : extracted) K.erase(x);
        trace.steps.push_back(PeelingStep{original[index], std::move(extracted)});
        current = current.without(index);
        original.erase(original.begin() + static_cast<std::ptrdiff_t>(index));
    }
    return trace;
}

namespace {

// Largest B with factor * B <= L * dstar(B), by scanning the levels where
// dstar is constant: dstar(B) = d exactly for B in [C(d-1+n,n), C(d+n,n)).
// C(d-1+n,n)/d strictly increases in d, so once a level's floor exceeds
// L*d/factor every later level is empty and the scan stops.
BigInt largest_fixed_point(const BigInt& L, std::size_t n, const BigInt& factor) {
    BigInt best = 0;
    for (long long d = 1;; ++d) {
        BigInt level_low = binomial(BigInt(d - 1) + n, static_cast<long long>(n));
        BigInt level_high = binomial(BigInt(d) + n, static_cast<long long>(n)) - 1;
        BigInt budget = (L * d) / factor;
        if (level_low > budget) break;
        best = (std::min)(level_high, budget);
    }
    return best;
}

}  // namespace

BigInt theorem1_bound(const BigInt& L, std::size_t n) {
    if (n < 3) throw RangeError("joint bounds need dimension >= 3");
    if (L < 0) throw RangeError("negative line count");
    return largest_fixed_point(L, n, 1);
}

BigInt theorem2_bound(const BigInt& L, std::size_t n, const BigInt& lambda) {
    if (n < 3) throw RangeError("joint bounds need dimension >= 3");
    if (L < 0) throw RangeError("negative line count");
    if (lambda < 1) throw RangeError("threshold must be at least 1");
    BigInt factor = ceil_nth_root(lambda, static_cast<unsigned>(n)) - BigInt(n) + 1;
    if (factor < 1)
        throw RangeError("threshold " + lambda.str() +
                         " is too small for a per-point bound in dimension " +
                         std::to_string(n));
    return largest_fixed_point(L, n, factor);
}

ChoiceAssignment choose(const LineCollection& c, const BigInt& lambda,
                        const ChooseOptions& options) {
    if (lambda < 1) throw RangeError("threshold must be at least 1");
    if (options.require_generic) {
        if (auto witness = genericity_witness(c))
            throw GenericityError("collection is not generic", *witness);
    }
    ChoiceAssignment out;
    out.lambda = lambda;
    for (const JointRecord& r : joints(c, options.cap))
        if (r.multiplicity >= lambda) out.j_lambda.insert(r.point);

    LineCollection current = c;
    std::vector<std::size_t> original(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) original[i] = i;
    while (true) {
        std::set<Point> J = joint_points(current);
        if (J.empty()) break;
        // Candidates still to be covered: in J_lambda and still a joint.
        std::set<Point> K;
        for (const Point& x : out.j_lambda)
            if (J.count(x)) K.insert(x);
        auto [index, count] = lightest_line(current, K);
        (void)count;
        std::size_t orig = original[index];
        out.chosen_lines.push_back(orig);
        for (const Point& x : points_on_line_in_set(current[index], K))
            out.choices[x].push_back(orig);
        current = current.without(index);
        original.erase(original.begin() + static_cast<std::ptrdiff_t>(index));
    }

    // The proof's two counting bounds, checked exactly.
    long long per_point_floor =
        static_cast<long long>(ceil_nth_root(lambda, static_cast<unsigned>(c.dim()))) -
        static_cast<long long>(c.dim()) + 1;
    for (const Point& x : out.j_lambda) {
        auto it = out.choices.find(x);
        long long chose = it == out.choices.end() ? 0 : static_cast<long long>(it->second.size());
        if (chose < 1)
            out.violations.push_back("point " + x.str() + " chose no line");
        else if (chose < per_point_floor)
            out.violations.push_back("point " + x.str() + " chose " + std::to_string(chose) +
                                     " lines, below the floor " +
                                     std::to_string(per_point_floor));
    }
    long long per_line_cap = dstar(c.dim(), BigInt(out.j_lambda.size()));
    std::map<std::size_t, std::size_t> choosers;
    for (const auto& [x, lines] : out.choices)
        for (std::size_t l : lines) ++choosers[l];
    for (const auto& [l, count] : choosers)
        if (static_cast<long long>(count) > per_line_cap)
            out.violations.push_back("line " + std::to_string(l) + " was chosen by " +
                                     std::to_string(count) + " points, above the cap " +
                                     std::to_string(per_line_cap));
    if (options.require_generic && !out.violations.empty())
        throw ContractError("choice bounds failed on a generic collection: " +
                            out.violations.front());
    return out;
}

SamplingReport sample_survival(const LineCollection& c, const BigInt& lambda,
                               std::uint64_t trials, std::uint64_t seed, std::size_t cap) {
    if (lambda < 1) throw RangeError("threshold must be at least 1");
    if (trials < 1) throw RangeError("need at least one trial");
    SamplingReport report;
    report.lambda = lambda;
    report.trials = trials;
    report.seed = seed;
    report.keep_probability =
        std::pow(lambda.convert_to<double>(), -1.0 / static_cast<double>(c.dim()));

    std::vector<std::vector<std::size_t>> tracked_incident;
    for (const JointRecord& r : joints(c, cap)) {
        if (r.multiplicity < lambda) continue;
        report.tracked.push_back(r.point);
        tracked_incident.push_back(r.incident_lines);
    }

    // One derived seed per trial, so trials are order-independent.
    std::vector<std::uint64_t> trial_seeds(trials);
    std::mt19937_64 master(seed);
    for (auto& s : trial_seeds) s = master();

    report.kept_counts.assign(trials, 0);
    report.survived.assign(trials, std::vector<char>(report.tracked.size(), 0));
    parallel_for(trials, [&](std::size_t t) {
        std::mt19937_64 rng(trial_seeds[t]);
        std::vector<char> kept(c.size(), 0);
        std::size_t kept_count = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < report.keep_probability) {
                kept[i] = 1;
                ++kept_count;
            }
        }
        report.kept_counts[t] = kept_count;
        for (std::size_t j = 0; j < report.tracked.size(); ++j) {
            std::vector<std::vector<FieldElement>> rows;
            for (std::size_t i : tracked_incident[j])
                if (kept[i]) rows.push_back(c[i].dir());
            if (rows.size() < c.dim()) continue;
            Matrix m(c.spec(), rows.size(), c.dim());
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t col = 0; col < c.dim(); ++col) m.at(r, col) = rows[r][col];
            if (rank(m) == c.dim()) report.survived[t][j] = 1;
        }
    });

    report.survival_frequency.assign(report.tracked.size(), 0.0);
    for (std::size_t j = 0; j < report.tracked.size(); ++j) {
        std::size_t hits = 0;
        for (std::size_t t = 0; t < trials; ++t)
            if (report.survived[t][j]) ++hits;
        report.survival_frequency[j] =
            static_cast<double>(hits) / static_cast<double>(trials);
    }
    return report;
}

SlopePartitionReport slope_partition_choice(const BigInt& p, std::size_t k) {
    FieldSpec field = FieldSpec::prime(p);
    long long pc = static_cast<long long>(p);
    if (k < 1 || static_cast<long long>(k) > pc)
        throw RangeError("part count must lie in [1, p]");
    SlopePartitionReport report;
    report.p = p;
    report.k = k;

    // Consecutive residue blocks; the first p mod k blocks get the extra
    // element.
    long long small = pc / static_cast<long long>(k);
    long long extra = pc % static_cast<long long>(k);
    long long next = 0;
    std::vector<long long> block_of(pc);
    for (long long b = 0; b < static_cast<long long>(k); ++b) {
        long long size = small + (b < extra ? 1 : 0);
        report.blocks.emplace_back(BigInt(next), BigInt(next + size - 1));
        for (long long y = next; y < next + size; ++y) block_of[y] = b;
        next += size;
    }

    auto slope_line = [&](long long slope, long long x0, long long y0) {
        Point through(field,
                      {field.element(x0), field.element(y0), field.zero()});
        return Line(through, {field.one(), field.element(slope), field.zero()});
    };
    for (long long slope = 0; slope < pc; ++slope)
        for (long long b = 0; b < pc; ++b) report.line_choosers[slope_line(slope, 0, b)] = 0;

    for (long long y0 = 0; y0 < pc; ++y0) {
        auto [lo, hi] = report.blocks[block_of[y0]];
        for (long long x0 = 0; x0 < pc; ++x0) {
            Point joint(field, {field.element(x0), field.element(y0), field.zero()});
            std::vector<Line>& lines = report.chosen[joint];
            for (BigInt slope = lo; slope <= hi; ++slope) {
                if (slope == 0) continue;  // slope-0 lines are never chosen
                Line l = slope_line(static_cast<long long>(slope), x0, y0);
                ++report.line_choosers[l];
                lines.push_back(std::move(l));
            }
        }
    }
    return report;
}

}  // namespace jointslab
