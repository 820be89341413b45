#pragma once

#include <random>
#include <vector>

#include "jointslab/geometry.hpp"
#include "jointslab/polynomial.hpp"

namespace jointslab::testsupport {

inline FieldElement random_element(const FieldSpec& f, std::mt19937_64& rng) {
    if (f.is_prime_field()) {
        auto p = static_cast<std::uint64_t>(f.characteristic());
        return f.element(BigInt(rng() % p));
    }
    long long num = static_cast<long long>(rng() % 21) - 10;
    long long den = 1 + static_cast<long long>(rng() % 6);
    return f.fraction(num, den);
}

inline std::vector<FieldElement> random_vector(const FieldSpec& f, std::size_t n,
                                               std::mt19937_64& rng) {
    std::vector<FieldElement> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_element(f, rng));
    return v;
}

inline Point random_point(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
    return Point(f, random_vector(f, n, rng));
}

inline Line random_line(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
    while (true) {
        auto dir = random_vector(f, n, rng);
        bool zero = true;
        for (const auto& e : dir)
            if (!e.is_zero()) { zero = false; break; }
        if (zero) continue;
        return Line(random_point(f, n, rng), dir);
    }
}

inline MultivariatePolynomial random_poly(const FieldSpec& f, std::size_t nvars,
                                          unsigned max_exp, std::size_t terms,
                                          std::mt19937_64& rng) {
    MultivariatePolynomial out(f, nvars);
    for (std::size_t t = 0; t < terms; ++t) {
        ExponentVector exps(nvars);
        for (auto& e : exps) e = static_cast<unsigned>(rng() % (max_exp + 1));
        out.add_term(exps, random_element(f, rng));
    }
    return out;
}

}  // namespace jointslab::testsupport
