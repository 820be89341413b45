#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "jointslab/geometry.hpp"
#include "jointslab/polynomial.hpp"

namespace jointslab {

// dstar = min{d >= 0 : C(d+n, n) > m}: the least degree at which monomials
// of degree <= d outnumber m points, so a nonzero polynomial of that degree
// vanishing on any m points exists for counting reasons.
struct DegreeBound {
    std::size_t n;
    BigInt m;
    long long dstar;
};

DegreeBound degree_bound(std::size_t n, const BigInt& m);

// Convenience accessor for dstar alone.
long long dstar(std::size_t n, const BigInt& m);

// Monomials of total degree <= d in n variables, graded order: ascending
// total degree, ties broken by ascending lexicographic exponent vector.
// Fixed globally so vanishing polynomials are reproducible.
std::vector<ExponentVector> monomials_up_to_degree(std::size_t n, long long d);

// A nonzero polynomial of degree <= d vanishing on every point of P, taken
// as the first nullspace basis vector of the evaluation matrix; nullopt iff
// only the zero polynomial qualifies.
std::optional<MultivariatePolynomial> vanishing_polynomial(const std::set<Point>& P, long long d);

// Smallest degree admitting a nonzero vanishing polynomial, with a witness.
// The search ascends from d = 0, so the step before the hit certifies
// minimality.
std::pair<long long, MultivariatePolynomial> minimal_vanishing_polynomial(
    const std::set<Point>& P);

}  // namespace jointslab
