#include "jointslab/polynomial.hpp"

#include <map>
#include <sstream>

#include "jointslab/errors.hpp"
#include "jointslab/geometry.hpp"

namespace jointslab {

long long MultivariatePolynomial::degree() const {
    long long best = -1;
    for (const auto& [exps, coeff] : terms_) {
        long long total = 0;
        for (unsigned e : exps) total += e;
        if (total > best) best = total;
    }
    return best;
}

void MultivariatePolynomial::add_term(const ExponentVector& exps, const FieldElement& coeff) {
    if (exps.size() != nvars_) throw StructureError("exponent vector length mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

FieldElement MultivariatePolynomial::evaluate(const std::vector<FieldElement>& point) const {
    if (point.size() != nvars_) throw StructureError("evaluation point dimension mismatch");
    FieldElement acc = spec_.zero();
    for (const auto& [exps, coeff] : terms_) {
        FieldElement term = coeff;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (exps[i]) term *= point[i].pow(exps[i]);
        acc += term;
    }
    return acc;
}

MultivariatePolynomial MultivariatePolynomial::operator+(const MultivariatePolynomial& rhs) const {
    if (nvars_ != rhs.nvars_ || spec_ != rhs.spec_)
        throw StructureError("polynomial shape mismatch in addition");
    MultivariatePolynomial out = *this;
    for (const auto& [exps, coeff] : rhs.terms_) out.add_term(exps, coeff);
    return out;
}

MultivariatePolynomial MultivariatePolynomial::operator-(const MultivariatePolynomial& rhs) const {
    return *this + rhs.scale(-spec_.one());
}

MultivariatePolynomial MultivariatePolynomial::operator*(const MultivariatePolynomial& rhs) const {
    if (nvars_ != rhs.nvars_ || spec_ != rhs.spec_)
        throw StructureError("polynomial shape mismatch in multiplication");
    MultivariatePolynomial out(spec_, nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            ExponentVector e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

MultivariatePolynomial MultivariatePolynomial::scale(const FieldElement& c) const {
    MultivariatePolynomial out(spec_, nvars_);
    for (const auto& [exps, coeff] : terms_) out.add_term(exps, coeff * c);
    return out;
}

std::string MultivariatePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << coeff.str();
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!exps[i]) continue;
            out << "*x" << (i + 1);
            if (exps[i] > 1) out << "^" << exps[i];
        }
    }
    return out.str();
}

UnivariatePolynomial::UnivariatePolynomial(FieldSpec spec, std::vector<FieldElement> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement UnivariatePolynomial::evaluate(const FieldElement& t) const {
    FieldElement acc = spec_.zero();
    for (std::size_t i = coeffs_.size(); i > 0; --i) acc = acc * t + coeffs_[i - 1];
    return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
    std::vector<FieldElement> out;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        out.push_back(spec_.element(static_cast<long long>(k)) * coeffs_[k]);
    return UnivariatePolynomial(spec_, std::move(out));
}

MultivariatePolynomial hasse_partial(const MultivariatePolynomial& f, std::size_t i) {
    if (i >= f.nvars()) throw StructureError("hasse partial: variable index out of range");
    MultivariatePolynomial out(f.spec(), f.nvars());
    for (const auto& [exps, coeff] : f.terms()) {
        if (exps[i] == 0) continue;
        // Multiplier is the exponent embedded into the field, the a_i-fold
        // sum of 1; it vanishes exactly when the characteristic divides a_i.
        FieldElement mult = f.spec().element(static_cast<long long>(exps[i]));
        ExponentVector e = exps;
        --e[i];
        out.add_term(e, mult * coeff);
    }
    return out;
}

std::vector<MultivariatePolynomial> gradient(const MultivariatePolynomial& f) {
    std::vector<MultivariatePolynomial> out;
    out.reserve(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(hasse_partial(f, i));
    return out;
}

namespace {

UnivariatePolynomial uni_mul(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return UnivariatePolynomial(a.spec());
    std::vector<FieldElement> out(a.coeffs().size() + b.coeffs().size() - 1, a.spec().zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return UnivariatePolynomial(a.spec(), std::move(out));
}

}  // namespace

UnivariatePolynomial restrict_to_line(const MultivariatePolynomial& f, const Line& l) {
    if (f.nvars() != l.dim()) throw StructureError("restriction: dimension mismatch");
    const FieldSpec& spec = f.spec();
    if (spec != l.spec()) throw StructureError("restriction: field mismatch");
    // power_cache[i][a] = (base_i + t*dir_i)^a as a polynomial in t, filled
    // bottom-up so each power is one multiply.
    std::vector<std::map<unsigned, UnivariatePolynomial>> power_cache(f.nvars());
    auto linear_power = [&](std::size_t i, unsigned a) -> const UnivariatePolynomial& {
        auto& cache = power_cache[i];
        if (cache.empty()) cache.emplace(0u, UnivariatePolynomial(spec, {spec.one()}));
        UnivariatePolynomial lin(spec, {l.base()[i], l.dir()[i]});
        for (unsigned e = static_cast<unsigned>(cache.rbegin()->first); e < a; ++e)
            cache.emplace(e + 1, uni_mul(cache.at(e), lin));
        return cache.at(a);
    };
    UnivariatePolynomial acc(spec);
    for (const auto& [exps, coeff] : f.terms()) {
        UnivariatePolynomial term(spec, {coeff});
        for (std::size_t i = 0; i < f.nvars(); ++i)
            if (exps[i]) term = uni_mul(term, linear_power(i, exps[i]));
        std::vector<FieldElement> sum(std::max(acc.coeffs().size(), term.coeffs().size()),
                                      spec.zero());
        for (std::size_t k = 0; k < acc.coeffs().size(); ++k) sum[k] = acc.coeffs()[k];
        for (std::size_t k = 0; k < term.coeffs().size(); ++k) sum[k] += term.coeffs()[k];
        acc = UnivariatePolynomial(spec, std::move(sum));
    }
    return acc;
}

MultivariatePolynomial poly_pow(const MultivariatePolynomial& f, unsigned long long k) {
    MultivariatePolynomial acc(f.spec(), f.nvars());
    acc.add_term(ExponentVector(f.nvars(), 0), f.spec().one());
    MultivariatePolynomial base = f;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

MultivariatePolynomial pth_root(const MultivariatePolynomial& f) {
    const BigInt& p = f.spec().characteristic();
    if (p == 0) throw UnsupportedError("pth root requires positive characteristic");
    MultivariatePolynomial out(f.spec(), f.nvars());
    for (const auto& [exps, coeff] : f.terms()) {
        ExponentVector e(f.nvars());
        for (std::size_t i = 0; i < f.nvars(); ++i) {
            if (BigInt(exps[i]) % p != 0)
                throw StructureError("pth root: exponent " + std::to_string(exps[i]) +
                                     " not divisible by " + p.str());
            e[i] = static_cast<unsigned>(BigInt(exps[i]) / p);
        }
        out.add_term(e, coeff.pth_root());
    }
    return out;
}

}  // namespace jointslab
