#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jointslab/errors.hpp"
#include "jointslab/field.hpp"

namespace jointslab {

// A point of F^n, n >= 3. Ordered lexicographically by coordinate so point
// sets are deterministic.
class Point {
  public:
    Point(FieldSpec spec, std::vector<FieldElement> coords);

    const FieldSpec& spec() const { return spec_; }
    std::size_t dim() const { return coords_.size(); }
    const std::vector<FieldElement>& coords() const { return coords_; }
    const FieldElement& operator[](std::size_t i) const { return coords_[i]; }

    bool operator==(const Point& rhs) const { return coords_ == rhs.coords_; }
    bool operator!=(const Point& rhs) const { return !(*this == rhs); }
    bool operator<(const Point& rhs) const;

    std::string str() const;

  private:
    FieldSpec spec_;
    std::vector<FieldElement> coords_;
};

// The line {base + t*dir : t in F} in canonical form: dir is monic (first
// nonzero coordinate 1) and base has coordinate 0 at dir's pivot index.
// Canonical form is unique per point set, so equality is structural.
class Line {
  public:
    // Canonicalizes the line through v with direction b.
    Line(const Point& v, const std::vector<FieldElement>& b);

    const FieldSpec& spec() const { return base_.spec(); }
    std::size_t dim() const { return base_.dim(); }
    const Point& base() const { return base_; }
    const std::vector<FieldElement>& dir() const { return dir_; }
    std::size_t pivot() const { return pivot_; }

    Point at(const FieldElement& t) const;
    bool contains(const Point& x) const;

    bool operator==(const Line& rhs) const { return base_ == rhs.base_ && dir_ == rhs.dir_; }
    bool operator!=(const Line& rhs) const { return !(*this == rhs); }
    bool operator<(const Line& rhs) const;

    std::string str() const;

  private:
    Point base_;
    std::vector<FieldElement> dir_;
    std::size_t pivot_;
};

// Immutable ordered list of distinct canonical lines in a fixed dimension.
class LineCollection {
  public:
    LineCollection(FieldSpec spec, std::size_t dim);
    // Deduplicates; first occurrence keeps its position. The number of
    // dropped duplicates is retained for reporting.
    LineCollection(FieldSpec spec, std::size_t dim, const std::vector<Line>& lines);

    const FieldSpec& spec() const { return spec_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return lines_.size(); }
    bool empty() const { return lines_.empty(); }
    const Line& operator[](std::size_t i) const { return lines_[i]; }
    const std::vector<Line>& lines() const { return lines_; }
    std::size_t merged_duplicates() const { return merged_; }

    // The collection with one line removed; indices above it shift down.
    LineCollection without(std::size_t index) const;

  private:
    FieldSpec spec_;
    std::size_t dim_;
    std::vector<Line> lines_;
    std::size_t merged_ = 0;
};

struct JointRecord {
    Point point;
    std::vector<std::size_t> incident_lines;  // ascending collection indices
    BigInt multiplicity;                      // ordered n-tuples spanning at point
};

// A concurrent n-subset of lines whose directions fail to span: the reason a
// collection is not generic.
struct GenericityWitness {
    Point point;
    std::vector<std::size_t> line_indices;
};

struct GenericityError : Error {
    GenericityError(std::string message, GenericityWitness w)
        : Error(std::move(message)), witness(std::move(w)) {}
    GenericityWitness witness;
};

std::optional<Point> intersect(const Line& l1, const Line& l2);

// All joints of the collection with exact multiplicities, sorted by point.
// Throws CapExceededError when more than `cap` lines pass through one
// candidate point (the subset enumeration is exact, never estimated).
std::vector<JointRecord> joints(const LineCollection& c, std::size_t cap = 24);

// Just the joint set, skipping multiplicity counts.
std::set<Point> joint_points(const LineCollection& c);

// N(x): ordered n-tuples of lines through x with spanning directions.
BigInt multiplicity(const Point& x, const LineCollection& c, std::size_t cap = 24);

std::optional<GenericityWitness> genericity_witness(const LineCollection& c);

inline bool is_generic(const LineCollection& c) { return !genericity_witness(c).has_value(); }

std::vector<Point> points_on_line_in_set(const Line& l, const std::set<Point>& K);

}  // namespace jointslab
