#include "jointslab/interpolation.hpp"

#include <algorithm>

#include "jointslab/linalg.hpp"
#include "jointslab/numeric.hpp"
#include "jointslab/parallel.hpp"

namespace jointslab {

DegreeBound degree_bound(std::size_t n, const BigInt& m) {
    if (n < 1) throw RangeError("degree bound needs dimension >= 1");
    if (m < 0) throw RangeError("degree bound needs point count >= 0");
    long long d = 0;
    while (binomial(BigInt(d) + n, static_cast<long long>(n)) <= m) ++d;
    return DegreeBound{n, m, d};
}

long long dstar(std::size_t n, const BigInt& m) { return degree_bound(n, m).dstar; }

namespace {

void enumerate_monomials(std::size_t n, long long remaining, ExponentVector& current,
                         std::vector<ExponentVector>& out) {
    if (current.size() == n) {
        out.push_back(current);
        return;
    }
    for (long long e = 0; e <= remaining; ++e) {
        current.push_back(static_cast<unsigned>(e));
        enumerate_monomials(n, remaining - e, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<ExponentVector> monomials_up_to_degree(std::size_t n, long long d) {
    std::vector<ExponentVector> out;
    for (long long total = 0; total <= d; ++total) {
        std::vector<ExponentVector> level;
        ExponentVector current;
        enumerate_monomials(n, total, current, level);
        // Keep only exact-degree vectors, already in ascending lex order.
        for (auto& e : level) {
            long long sum = 0;
            for (unsigned x : e) sum += x;
            if (sum == total) out.push_back(std::move(e));
        }
    }
    return out;
}

std::optional<MultivariatePolynomial> vanishing_polynomial(const std::set<Point>& P,
                                                           long long d) {
    if (P.empty()) throw ContractError("vanishing polynomial needs a nonempty point set");
    const FieldSpec& spec = P.begin()->spec();
    std::size_t n = P.begin()->dim();
    for (const Point& x : P)
        if (x.dim() != n || x.spec() != spec)
            throw ContractError("vanishing polynomial: mixed point sets");
    std::vector<ExponentVector> monos = monomials_up_to_degree(n, d);
    std::vector<const Point*> pts;
    pts.reserve(P.size());
    for (const Point& x : P) pts.push_back(&x);
    Matrix m(spec, pts.size(), monos.size());
    parallel_for(pts.size(), [&](std::size_t r) {
        const Point& x = *pts[r];
        for (std::size_t c = 0; c < monos.size(); ++c) {
            FieldElement v = spec.one();
            for (std::size_t i = 0; i < n; ++i)
                if (monos[c][i]) v *= x[i].pow(monos[c][i]);
            m.at(r, c) = v;
        }
    });
    auto basis = nullspace_basis(m);
    if (basis.empty()) return std::nullopt;
    MultivariatePolynomial f(spec, n);
    for (std::size_t c = 0; c < monos.size(); ++c) f.add_term(monos[c], basis[0][c]);
    return f;
}

std::pair<long long, MultivariatePolynomial> minimal_vanishing_polynomial(
    const std::set<Point>& P) {
    if (P.empty()) throw ContractError("minimal vanishing polynomial needs a nonempty set");
    long long limit = dstar(P.begin()->dim(), BigInt(P.size()));
    for (long long d = 0; d <= limit; ++d) {
        auto f = vanishing_polynomial(P, d);
        if (f) return {d, std::move(*f)};
    }
    // Unreachable: at d = dstar there are more monomials than constraints.
    throw ContractError("no vanishing polynomial up to the counting bound");
}

}  // namespace jointslab
