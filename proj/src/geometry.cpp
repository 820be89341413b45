#include "jointslab/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "jointslab/linalg.hpp"
#include "jointslab/numeric.hpp"
#include "jointslab/parallel.hpp"

namespace jointslab {

Point::Point(FieldSpec spec, std::vector<FieldElement> coords)
    : spec_(std::move(spec)), coords_(std::move(coords)) {
    if (coords_.size() < 3)
        throw GeometryError("ambient dimension must be at least 3, got " +
                            std::to_string(coords_.size()));
    for (const auto& c : coords_)
        if (c.spec() != spec_) throw GeometryError("point coordinate from a different field");
}

bool Point::operator<(const Point& rhs) const {
    for (std::size_t i = 0; i < coords_.size() && i < rhs.coords_.size(); ++i) {
        if (coords_[i] < rhs.coords_[i]) return true;
        if (rhs.coords_[i] < coords_[i]) return false;
    }
    return coords_.size() < rhs.coords_.size();
}

std::string Point::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ",";
        out << coords_[i].str();
    }
    out << ")";
    return out.str();
}

namespace {

std::size_t first_nonzero(const std::vector<FieldElement>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return v.size();
}

}  // namespace

Line::Line(const Point& v, const std::vector<FieldElement>& b) : base_(v), dir_(b) {
    if (b.size() != v.dim()) throw GeometryError("direction dimension mismatch");
    pivot_ = first_nonzero(dir_);
    if (pivot_ == dir_.size()) throw GeometryError("line direction is zero");
    FieldElement inv = dir_[pivot_].inverse();
    for (auto& d : dir_) d *= inv;
    // Slide the base along the line so its pivot coordinate is 0.
    FieldElement t = v[pivot_];
    std::vector<FieldElement> coords = v.coords();
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= t * dir_[i];
    base_ = Point(v.spec(), std::move(coords));
}

Point Line::at(const FieldElement& t) const {
    std::vector<FieldElement> coords = base_.coords();
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += t * dir_[i];
    return Point(spec(), std::move(coords));
}

bool Line::contains(const Point& x) const {
    if (x.dim() != dim()) return false;
    // base[pivot] = 0 and dir[pivot] = 1, so the parameter is forced.
    const FieldElement& t = x[pivot_];
    for (std::size_t i = 0; i < dim(); ++i)
        if (base_[i] + t * dir_[i] != x[i]) return false;
    return true;
}

bool Line::operator<(const Line& rhs) const {
    if (base_ < rhs.base_) return true;
    if (rhs.base_ < base_) return false;
    for (std::size_t i = 0; i < dir_.size() && i < rhs.dir_.size(); ++i) {
        if (dir_[i] < rhs.dir_[i]) return true;
        if (rhs.dir_[i] < dir_[i]) return false;
    }
    return dir_.size() < rhs.dir_.size();
}

std::string Line::str() const {
    std::ostringstream out;
    out << base_.str() << "+t*(";
    for (std::size_t i = 0; i < dir_.size(); ++i) {
        if (i) out << ",";
        out << dir_[i].str();
    }
    out << ")";
    return out.str();
}

LineCollection::LineCollection(FieldSpec spec, std::size_t dim)
    : spec_(std::move(spec)), dim_(dim) {
    if (dim_ < 3) throw GeometryError("ambient dimension must be at least 3");
}

LineCollection::LineCollection(FieldSpec spec, std::size_t dim, const std::vector<Line>& lines)
    : LineCollection(std::move(spec), dim) {
    std::set<Line> seen;
    for (const Line& l : lines) {
        if (l.dim() != dim_) throw GeometryError("line dimension mismatch in collection");
        if (l.spec() != spec_) throw GeometryError("line field mismatch in collection");
        if (seen.insert(l).second) lines_.push_back(l);
        else ++merged_;
    }
}

LineCollection LineCollection::without(std::size_t index) const {
    std::vector<Line> rest;
    rest.reserve(lines_.size() - 1);
    for (std::size_t i = 0; i < lines_.size(); ++i)
        if (i != index) rest.push_back(lines_[i]);
    return LineCollection(spec_, dim_, rest);
}

std::optional<Point> intersect(const Line& l1, const Line& l2) {
    if (l1.spec() != l2.spec() || l1.dim() != l2.dim())
        throw GeometryError("intersect: lines live in different spaces");
    if (l1 == l2) return std::nullopt;
    // base1 + t*dir1 = base2 + s*dir2, unknowns (t, s).
    const FieldSpec& f = l1.spec();
    std::size_t n = l1.dim();
    Matrix m(f, n, 2);
    Vector rhs(n, f.zero());
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, 0) = l1.dir()[i];
        m.at(i, 1) = -l2.dir()[i];
        rhs[i] = l2.base()[i] - l1.base()[i];
    }
    Vector sol;
    if (!solve(m, rhs, sol)) return std::nullopt;
    return l1.at(sol[0]);
}

namespace {

// Incremental row reduction over a fixed set of direction vectors. Rows are
// kept reduced so rank updates are a single elimination pass.
class SpanTracker {
  public:
    explicit SpanTracker(const FieldSpec& f) : spec_(f) {}

    std::size_t rank() const { return rows_.size(); }

    // Reduces v against the current rows; returns false (and leaves the
    // tracker unchanged) when v is already in the span.
    bool add(std::vector<FieldElement> v) {
        for (const auto& row : rows_) {
            std::size_t p = row.second;
            if (v[p].is_zero()) continue;
            FieldElement factor = v[p];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= factor * row.first[i];
        }
        std::size_t p = first_nonzero(v);
        if (p == v.size()) return false;
        FieldElement inv = v[p].inverse();
        for (auto& e : v) e *= inv;
        rows_.emplace_back(std::move(v), p);
        return true;
    }

    SpanTracker branch() const { return *this; }

  private:
    FieldSpec spec_;
    std::vector<std::pair<std::vector<FieldElement>, std::size_t>> rows_;
};

// Number of k-subsets of dirs[from..] that extend the tracker to full rank n.
// Every member of an independent subset must raise the rank, so dependent
// picks prune their whole branch.
BigInt count_spanning_subsets(const std::vector<std::vector<FieldElement>>& dirs,
                              std::size_t from, const SpanTracker& tracker, std::size_t n) {
    std::size_t need = n - tracker.rank();
    if (need == 0) return 1;
    if (dirs.size() - from < need) return 0;
    BigInt total = 0;
    for (std::size_t i = from; i + need <= dirs.size(); ++i) {
        SpanTracker next = tracker.branch();
        if (!next.add(dirs[i])) continue;
        total += count_spanning_subsets(dirs, i + 1, next, n);
    }
    return total;
}

std::vector<std::size_t> incident_indices(const Point& x, const LineCollection& c) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].contains(x)) idx.push_back(i);
    return idx;
}

BigInt multiplicity_at(const Point& x, const LineCollection& c,
                       const std::vector<std::size_t>& incident, std::size_t cap) {
    std::size_t n = c.dim();
    if (incident.size() < n) return 0;
    if (incident.size() > cap)
        throw CapExceededError("point " + x.str() + " lies on " +
                               std::to_string(incident.size()) +
                               " lines, above the enumeration cap " + std::to_string(cap));
    std::vector<std::vector<FieldElement>> dirs;
    dirs.reserve(incident.size());
    for (std::size_t i : incident) dirs.push_back(c[i].dir());
    BigInt subsets = count_spanning_subsets(dirs, 0, SpanTracker(c.spec()), n);
    return subsets * factorial(static_cast<unsigned>(n));
}

std::set<Point> candidate_points(const LineCollection& c) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) pairs.emplace_back(i, j);
    std::vector<std::optional<Point>> hits(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t k) {
        hits[k] = intersect(c[pairs[k].first], c[pairs[k].second]);
    });
    std::set<Point> candidates;
    for (auto& h : hits)
        if (h) candidates.insert(*h);
    return candidates;
}

}  // namespace

std::vector<JointRecord> joints(const LineCollection& c, std::size_t cap) {
    std::set<Point> candidates = candidate_points(c);
    std::vector<Point> pts(candidates.begin(), candidates.end());
    std::vector<std::optional<JointRecord>> records(pts.size());
    std::vector<std::exception_ptr> errors(pts.size());
    parallel_for(pts.size(), [&](std::size_t k) {
        try {
            auto incident = incident_indices(pts[k], c);
            if (incident.size() < c.dim()) return;
            BigInt mult = multiplicity_at(pts[k], c, incident, cap);
            if (mult == 0) return;
            records[k] = JointRecord{pts[k], std::move(incident), std::move(mult)};
        } catch (...) {
            errors[k] = std::current_exception();
        }
    });
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<JointRecord> out;
    for (auto& r : records)
        if (r) out.push_back(std::move(*r));
    return out;
}

std::set<Point> joint_points(const LineCollection& c) {
    std::set<Point> candidates = candidate_points(c);
    std::set<Point> result;
    for (const Point& x : candidates) {
        auto incident = incident_indices(x, c);
        if (incident.size() < c.dim()) continue;
        SpanTracker tracker(c.spec());
        for (std::size_t i : incident) tracker.add(c[i].dir());
        if (tracker.rank() == c.dim()) result.insert(x);
    }
    return result;
}

BigInt multiplicity(const Point& x, const LineCollection& c, std::size_t cap) {
    return multiplicity_at(x, c, incident_indices(x, c), cap);
}

std::optional<GenericityWitness> genericity_witness(const LineCollection& c) {
    std::size_t n = c.dim();
    for (const Point& x : candidate_points(c)) {
        auto incident = incident_indices(x, c);
        if (incident.size() < n) continue;
        SpanTracker all(c.spec());
        for (std::size_t i : incident) all.add(c[i].dir());
        if (all.rank() < n) {
            // Every n-subset is degenerate; report the first.
            return GenericityWitness{
                x, std::vector<std::size_t>(incident.begin(), incident.begin() + n)};
        }
        // Full rank overall: scan n-subsets for a degenerate one.
        std::vector<std::size_t> pick(n);
        for (std::size_t i = 0; i < n; ++i) pick[i] = i;
        while (true) {
            SpanTracker t(c.spec());
            bool independent = true;
            for (std::size_t i : pick)
                if (!t.add(c[incident[i]].dir())) { independent = false; break; }
            if (!independent) {
                std::vector<std::size_t> w;
                for (std::size_t i : pick) w.push_back(incident[i]);
                return GenericityWitness{x, std::move(w)};
            }
            // Next combination in lexicographic order.
            std::size_t i = n;
            while (i > 0 && pick[i - 1] == incident.size() - n + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::vector<Point> points_on_line_in_set(const Line& l, const std::set<Point>& K) {
    std::vector<Point> out;
    for (const Point& x : K)
        if (l.contains(x)) out.push_back(x);
    return out;
}

}  // namespace jointslab
