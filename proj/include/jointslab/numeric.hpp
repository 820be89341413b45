#pragma once

#include "jointslab/field.hpp"

namespace jointslab {

// C(n, k) as an exact integer; zero when k < 0 or k > n.
BigInt binomial(const BigInt& n, long long k);

BigInt factorial(unsigned n);

// Largest r with r^n <= m. Requires m >= 0, n >= 1.
BigInt floor_nth_root(const BigInt& m, unsigned n);

// Smallest r with r^n >= m. Requires m >= 0, n >= 1.
BigInt ceil_nth_root(const BigInt& m, unsigned n);

}  // namespace jointslab
