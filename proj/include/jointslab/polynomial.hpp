#pragma once

#include <map>
#include <string>
#include <vector>

#include "jointslab/field.hpp"

namespace jointslab {

using ExponentVector = std::vector<unsigned>;

// Sparse polynomial in n variables. Terms map exponent vectors to nonzero
// coefficients; the zero polynomial has an empty term map.
class MultivariatePolynomial {
  public:
    MultivariatePolynomial(FieldSpec spec, std::size_t nvars)
        : spec_(std::move(spec)), nvars_(nvars) {}

    const FieldSpec& spec() const { return spec_; }
    std::size_t nvars() const { return nvars_; }
    const std::map<ExponentVector, FieldElement>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Total degree; -1 stands in for the zero polynomial's undefined degree.
    long long degree() const;

    // Adds c * x^exps, dropping the term if the sum cancels.
    void add_term(const ExponentVector& exps, const FieldElement& coeff);

    FieldElement evaluate(const std::vector<FieldElement>& point) const;

    MultivariatePolynomial operator+(const MultivariatePolynomial& rhs) const;
    MultivariatePolynomial operator-(const MultivariatePolynomial& rhs) const;
    MultivariatePolynomial operator*(const MultivariatePolynomial& rhs) const;
    MultivariatePolynomial scale(const FieldElement& c) const;

    bool operator==(const MultivariatePolynomial& rhs) const {
        return nvars_ == rhs.nvars_ && spec_ == rhs.spec_ && terms_ == rhs.terms_;
    }
    bool operator!=(const MultivariatePolynomial& rhs) const { return !(*this == rhs); }

    std::string str() const;

  private:
    FieldSpec spec_;
    std::size_t nvars_;
    std::map<ExponentVector, FieldElement> terms_;
};

// Dense polynomial in one variable t; coefficient i multiplies t^i, trailing
// zeros stripped.
class UnivariatePolynomial {
  public:
    explicit UnivariatePolynomial(FieldSpec spec) : spec_(std::move(spec)) {}
    UnivariatePolynomial(FieldSpec spec, std::vector<FieldElement> coeffs);

    const FieldSpec& spec() const { return spec_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

    FieldElement evaluate(const FieldElement& t) const;
    // Formal derivative: coefficient k of t^k becomes k*c of t^{k-1}, with
    // the integer k embedded into the field.
    UnivariatePolynomial derivative() const;

    bool operator==(const UnivariatePolynomial& rhs) const {
        return spec_ == rhs.spec_ && coeffs_ == rhs.coeffs_;
    }

  private:
    FieldSpec spec_;
    std::vector<FieldElement> coeffs_;
};

// Coefficient of z_i in f(x+z): the first-order Hasse derivative, which for
// a monomial sends x_i^a to (a-fold sum of the coefficient) x_i^{a-1}.
MultivariatePolynomial hasse_partial(const MultivariatePolynomial& f, std::size_t i);

std::vector<MultivariatePolynomial> gradient(const MultivariatePolynomial& f);

class Line;

// Expands f(base + t * dir) as a polynomial in t.
UnivariatePolynomial restrict_to_line(const MultivariatePolynomial& f, const Line& l);

// Exact k-th power by repeated squaring.
MultivariatePolynomial poly_pow(const MultivariatePolynomial& f, unsigned long long k);

// Inverse of the Frobenius power map: g with g^p = f. Requires positive
// characteristic and all exponents divisible by p.
MultivariatePolynomial pth_root(const MultivariatePolynomial& f);

}  // namespace jointslab
