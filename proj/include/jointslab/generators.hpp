#pragma once

#include <cstdint>
#include <string>

#include "jointslab/geometry.hpp"

namespace jointslab {

// Parameters for a named family; which fields matter depends on the family.
struct ConfigSpec {
    std::string family;  // grid | star | plane_with_verticals | pencil | random
    std::size_t n = 3;
    FieldSpec field;
    std::size_t M = 0;     // grid edge length / pencil size
    std::size_t L = 0;     // star / random line count
    std::uint64_t seed = 0;
};

// n*M^(n-1) axis-parallel lines: for each coordinate direction e_j, the lines
// through (k_1,...,0,...,k_n) with k_i in {1..M}. Joint set = {1..M}^n.
LineCollection grid(std::size_t n, std::size_t M, const FieldSpec& field);

// L lines through the origin, every n of whose directions span. Directions
// are sampled from the seed and certified at construction; a sample that
// breaks general position is rejected and redrawn.
LineCollection generic_star(std::size_t n, std::size_t L, const FieldSpec& field,
                            std::uint64_t seed);

// All lines of the plane {x3=0} in F_p^3 (p^2 slope lines plus p in-plane
// verticals), plus the vertical line through each of the p^2 plane points.
// Every plane point is a joint; the collection is not generic.
LineCollection plane_with_verticals(const BigInt& p);

// The x3-axis (index 0) plus M concurrent lines through the origin inside
// {x3=0} with distinct directions. Exactly one joint, at the origin.
LineCollection axis_with_planar_pencil(std::size_t M, const FieldSpec& field);

// L distinct seeded random lines.
LineCollection random_lines(std::size_t n, std::size_t L, const FieldSpec& field,
                            std::uint64_t seed);

LineCollection make_collection(const ConfigSpec& config);

}  // namespace jointslab
