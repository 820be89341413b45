#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jointslab/geometry.hpp"
#include "jointslab/interpolation.hpp"

namespace jointslab {

struct PeelingStep {
    std::size_t line_index;        // index into the original collection
    std::vector<Point> extracted;  // points of the residual set on that line
};

// Record of the peeling run: the extracted sets are pairwise disjoint and
// union to the full joint set, each has size <= dstar(|J|), and there are at
// most L steps.
struct PeelingTrace {
    std::vector<PeelingStep> steps;
    std::size_t initial_joint_count = 0;
    long long part_bound = 0;  // dstar(initial_joint_count)
};

struct ChoiceAssignment {
    BigInt lambda;
    std::vector<std::size_t> chosen_lines;  // original indices, in choice order
    std::set<Point> j_lambda;               // joints with multiplicity >= lambda
    std::map<Point, std::vector<std::size_t>> choices;  // point -> chosen lines
    // Bound failures, populated instead of throwing when genericity checking
    // is disabled. Empty on a clean run.
    std::vector<std::string> violations;
};

struct ChooseOptions {
    bool require_generic = true;
    std::size_t cap = 24;  // per-point line enumeration cap for multiplicities
};

struct SamplingReport {
    BigInt lambda;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double keep_probability = 0.0;  // lambda^(-1/n)
    std::vector<Point> tracked;     // joints with multiplicity >= lambda
    std::vector<std::size_t> kept_counts;     // per trial
    std::vector<std::vector<char>> survived;  // [trial][tracked joint]
    std::vector<double> survival_frequency;   // per tracked joint
};

struct SlopePartitionReport {
    BigInt p;
    std::size_t k = 0;
    std::vector<std::pair<BigInt, BigInt>> blocks;  // inclusive residue ranges
    std::map<Point, std::vector<Line>> chosen;      // plane joint -> chosen lines
    std::map<Line, std::size_t> line_choosers;      // every slope line, zero included
};

// The line of the collection meeting K in the fewest points (ties: lowest
// index), with that count. K must be a nonempty subset of the joints; the
// returned count is checked against the counting bound dstar(|K|).
std::pair<std::size_t, std::size_t> extract_light_line(const LineCollection& c,
                                                       const std::set<Point>& K);

// Repeatedly extracts the lightest line and removes its points from the
// residual joint set until none remain.
PeelingTrace peel(const LineCollection& c);

// Largest B with B <= L * dstar(B): an explicit joint-count bound for any
// collection of L lines in dimension n, asymptotically ~ L^(n/(n-1)).
BigInt theorem1_bound(const BigInt& L, std::size_t n);

// Largest B with B * (ceil(lambda^(1/n)) - n + 1) <= L * dstar(B), bounding
// the count of joints of multiplicity >= lambda. Requires the per-point
// factor to be positive.
BigInt theorem2_bound(const BigInt& L, std::size_t n, const BigInt& lambda);

// Greedy assignment: step m removes the line of the residual collection
// meeting J_lambda-and-still-a-joint in the fewest points; the points of
// that set on the removed line choose it. Stops when no joints remain.
ChoiceAssignment choose(const LineCollection& c, const BigInt& lambda,
                        const ChooseOptions& options = {});

// Monte Carlo line subsampling: each trial keeps each line independently
// with probability lambda^(-1/n) and records which high-multiplicity joints
// stay joints of the kept subcollection. Deterministic per seed.
SamplingReport sample_survival(const LineCollection& c, const BigInt& lambda,
                               std::uint64_t trials, std::uint64_t seed,
                               std::size_t cap = 24);

// The slope-block scheme on plane_with_verticals(p): F_p split into k
// consecutive blocks; each plane joint chooses the nonzero slopes in its
// y-coordinate's block. Counts are produced by direct enumeration.
SlopePartitionReport slope_partition_choice(const BigInt& p, std::size_t k);

}  // namespace jointslab
