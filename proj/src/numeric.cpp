#include "jointslab/numeric.hpp"

#include "jointslab/errors.hpp"

namespace jointslab {

BigInt binomial(const BigInt& n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc *= n - (k - i);
        acc /= i;
    }
    return acc;
}

BigInt factorial(unsigned n) {
    BigInt acc = 1;
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return acc;
}

BigInt floor_nth_root(const BigInt& m, unsigned n) {
    if (m < 0) throw RangeError("nth root of negative value");
    if (n == 0) throw RangeError("0th root");
    if (m <= 1 || n == 1) return m;
    BigInt lo = 0, hi = m;
    // Invariant: lo^n <= m < (hi+1)^n.
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (pow(mid, n) <= m) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

BigInt ceil_nth_root(const BigInt& m, unsigned n) {
    BigInt r = floor_nth_root(m, n);
    if (pow(r, n) == m) return r;
    return r + 1;
}

}  // namespace jointslab
