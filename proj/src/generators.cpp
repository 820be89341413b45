#include "jointslab/generators.hpp"

#include <random>

#include "jointslab/linalg.hpp"

namespace jointslab {

namespace {

FieldElement sample_element(const FieldSpec& f, std::mt19937_64& rng) {
    if (f.is_prime_field()) {
        // Modulo bias is irrelevant here; only determinism matters.
        BigInt p = f.characteristic();
        if (p <= (std::numeric_limits<std::uint64_t>::max)())
            return f.element(BigInt(rng() % static_cast<std::uint64_t>(p)));
        return f.element(BigInt(rng()));
    }
    return f.element(static_cast<long long>(rng() % 101) - 50);
}

std::vector<FieldElement> sample_vector(const FieldSpec& f, std::size_t n,
                                        std::mt19937_64& rng) {
    std::vector<FieldElement> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(sample_element(f, rng));
    return v;
}

bool all_zero(const std::vector<FieldElement>& v) {
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

Point origin(const FieldSpec& f, std::size_t n) {
    return Point(f, std::vector<FieldElement>(n, f.zero()));
}

// Every (n-1)-subset of accepted directions plus the candidate must span.
// Subsets are walked with an incremental rank tracker per branch.
bool keeps_general_position(const std::vector<std::vector<FieldElement>>& accepted,
                            const std::vector<FieldElement>& candidate,
                            const FieldSpec& f, std::size_t n) {
    // Candidate must be independent of each single accepted direction, or
    // it would duplicate a line through the origin.
    Matrix pair(f, 2, n);
    for (const auto& a : accepted) {
        for (std::size_t i = 0; i < n; ++i) {
            pair.at(0, i) = a[i];
            pair.at(1, i) = candidate[i];
        }
        if (rank(pair) < 2) return false;
    }
    if (accepted.size() < n - 1) return true;
    std::vector<std::size_t> pick(n - 1);
    for (std::size_t i = 0; i < n - 1; ++i) pick[i] = i;
    while (true) {
        Matrix m(f, n, n);
        for (std::size_t r = 0; r + 1 < n; ++r)
            for (std::size_t i = 0; i < n; ++i) m.at(r, i) = accepted[pick[r]][i];
        for (std::size_t i = 0; i < n; ++i) m.at(n - 1, i) = candidate[i];
        if (rank(m) < n) return false;
        std::size_t i = n - 1;
        while (i > 0 && pick[i - 1] == accepted.size() - (n - 1) + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < n - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
    return true;
}

}  // namespace

LineCollection grid(std::size_t n, std::size_t M, const FieldSpec& field) {
    if (n < 3) throw RangeError("grid needs dimension >= 3");
    if (M < 1) throw RangeError("grid needs edge length >= 1");
    if (field.is_prime_field() && BigInt(M) >= field.characteristic())
        throw RangeError("grid edge length " + std::to_string(M) +
                         " does not embed into F_" + field.characteristic().str());
    std::vector<Line> lines;
    for (std::size_t j = 0; j < n; ++j) {
        // Lines parallel to e_j through every choice of the other coordinates
        // in {1..M}, walked in lexicographic order.
        std::vector<std::size_t> k(n - 1, 1);
        while (true) {
            std::vector<FieldElement> base;
            base.reserve(n);
            std::size_t pos = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == j) base.push_back(field.zero());
                else base.push_back(field.element(static_cast<long long>(k[pos++])));
            }
            std::vector<FieldElement> dir(n, field.zero());
            dir[j] = field.one();
            lines.emplace_back(Point(field, base), dir);
            std::size_t i = n - 1;
            while (i > 0 && k[i - 1] == M) --i;
            if (i == 0) break;
            ++k[i - 1];
            for (std::size_t t = i; t < n - 1; ++t) k[t] = 1;
        }
    }
    return LineCollection(field, n, lines);
}

LineCollection generic_star(std::size_t n, std::size_t L, const FieldSpec& field,
                            std::uint64_t seed) {
    if (n < 3) throw RangeError("star needs dimension >= 3");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<FieldElement>> dirs;
    Point zero = origin(field, n);
    std::size_t attempts = 0;
    const std::size_t cap = 200 * L + 1000;
    while (dirs.size() < L) {
        if (++attempts > cap)
            throw GenerationError("could not place " + std::to_string(L) +
                                  " general-position directions in this field");
        auto d = sample_vector(field, n, rng);
        if (all_zero(d)) continue;
        if (!keeps_general_position(dirs, d, field, n)) continue;
        dirs.push_back(std::move(d));
    }
    std::vector<Line> lines;
    lines.reserve(L);
    for (const auto& d : dirs) lines.emplace_back(zero, d);
    return LineCollection(field, n, lines);
}

LineCollection plane_with_verticals(const BigInt& p) {
    FieldSpec field = FieldSpec::prime(p);
    long long pc = static_cast<long long>(p);
    std::vector<Line> lines;
    auto plane_point = [&](long long x, long long y) {
        return Point(field, {field.element(x), field.element(y), field.zero()});
    };
    // Slope lines y = a x + b inside {x3 = 0}.
    for (long long a = 0; a < pc; ++a)
        for (long long b = 0; b < pc; ++b)
            lines.emplace_back(plane_point(0, b),
                               std::vector<FieldElement>{field.one(), field.element(a),
                                                         field.zero()});
    // In-plane vertical lines x = c.
    for (long long c = 0; c < pc; ++c)
        lines.emplace_back(plane_point(c, 0),
                           std::vector<FieldElement>{field.zero(), field.one(), field.zero()});
    // A vertical line through every plane point.
    for (long long x = 0; x < pc; ++x)
        for (long long y = 0; y < pc; ++y)
            lines.emplace_back(plane_point(x, y),
                               std::vector<FieldElement>{field.zero(), field.zero(),
                                                         field.one()});
    return LineCollection(field, 3, lines);
}

LineCollection axis_with_planar_pencil(std::size_t M, const FieldSpec& field) {
    if (field.is_prime_field() && BigInt(M) > field.characteristic() + 1)
        throw RangeError("only " + BigInt(field.characteristic() + 1).str() +
                         " distinct planar directions exist in this field");
    Point zero = origin(field, 3);
    std::vector<Line> lines;
    // The axis goes first so index 0 is the line the greedy run removes.
    lines.emplace_back(zero, std::vector<FieldElement>{field.zero(), field.zero(), field.one()});
    for (std::size_t s = 0; s < M; ++s) {
        if (field.is_prime_field() && BigInt(s) == field.characteristic()) {
            lines.emplace_back(zero, std::vector<FieldElement>{field.zero(), field.one(),
                                                               field.zero()});
        } else {
            lines.emplace_back(zero,
                               std::vector<FieldElement>{field.one(),
                                                         field.element(static_cast<long long>(s)),
                                                         field.zero()});
        }
    }
    return LineCollection(field, 3, lines);
}

LineCollection random_lines(std::size_t n, std::size_t L, const FieldSpec& field,
                            std::uint64_t seed) {
    if (n < 3) throw RangeError("random lines need dimension >= 3");
    std::mt19937_64 rng(seed);
    std::set<Line> seen;
    std::vector<Line> lines;
    std::size_t attempts = 0;
    const std::size_t cap = 200 * L + 1000;
    while (lines.size() < L) {
        if (++attempts > cap)
            throw GenerationError("field too small for " + std::to_string(L) +
                                  " distinct lines");
        auto base = sample_vector(field, n, rng);
        auto dir = sample_vector(field, n, rng);
        if (all_zero(dir)) continue;
        Line l(Point(field, base), dir);
        if (seen.insert(l).second) lines.push_back(l);
    }
    return LineCollection(field, n, lines);
}

LineCollection make_collection(const ConfigSpec& config) {
    if (config.family == "grid") return grid(config.n, config.M, config.field);
    if (config.family == "star") return generic_star(config.n, config.L, config.field, config.seed);
    if (config.family == "plane_with_verticals") {
        if (!config.field.is_prime_field())
            throw RangeError("plane_with_verticals needs a prime field");
        return plane_with_verticals(config.field.characteristic());
    }
    if (config.family == "pencil") return axis_with_planar_pencil(config.M, config.field);
    if (config.family == "random")
        return random_lines(config.n, config.L, config.field, config.seed);
    throw RangeError("unknown family '" + config.family + "'");
}

}  // namespace jointslab
