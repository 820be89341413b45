#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "jointslab/errors.hpp"

namespace jointslab {

using BigInt = boost::multiprecision::cpp_int;

class FieldElement;

// A prime field F_p or the rationals (characteristic 0). Values are plain
// data; two specs are interchangeable iff their characteristics agree.
class FieldSpec {
  public:
    FieldSpec() : characteristic_(0) {}
    explicit FieldSpec(BigInt characteristic);

    static FieldSpec rationals() { return FieldSpec(); }
    static FieldSpec prime(BigInt p) { return FieldSpec(std::move(p)); }

    const BigInt& characteristic() const { return characteristic_; }
    bool is_prime_field() const { return characteristic_ != 0; }

    FieldElement zero() const;
    FieldElement one() const;
    // Embeds an integer: the residue class for F_p, the integer itself for Q.
    FieldElement element(const BigInt& value) const;
    FieldElement element(long long value) const;
    // num/den as a field element; den must be invertible.
    FieldElement fraction(const BigInt& num, const BigInt& den) const;
    // Parses "13", "-4" or, over Q, "3/4".
    FieldElement parse(const std::string& text) const;

    bool operator==(const FieldSpec& other) const { return characteristic_ == other.characteristic_; }
    bool operator!=(const FieldSpec& other) const { return !(*this == other); }

  private:
    BigInt characteristic_;
};

// An exact field scalar in canonical form: residue in [0, p) over F_p, or a
// reduced fraction with positive denominator over Q. Equality is structural.
class FieldElement {
  public:
    FieldElement() : spec_(), num_(0), den_(1) {}

    const FieldSpec& spec() const { return spec_; }
    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;

    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }
    FieldElement& operator/=(const FieldElement& rhs) { return *this = *this / rhs; }

    FieldElement inverse() const;
    FieldElement pow(unsigned long long exponent) const;
    // The element g with g^p = *this; over a prime field this is the element
    // itself (Frobenius is the identity on F_p).
    FieldElement pth_root() const;

    bool operator==(const FieldElement& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_ && spec_ == rhs.spec_;
    }
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }
    // Value order (residue order over F_p); used for deterministic containers.
    bool operator<(const FieldElement& rhs) const;

    std::string str() const;

    friend class FieldSpec;

  private:
    FieldElement(FieldSpec spec, BigInt num, BigInt den)
        : spec_(std::move(spec)), num_(std::move(num)), den_(std::move(den)) {}

    void require_same_spec(const FieldElement& rhs) const;

    FieldSpec spec_;
    BigInt num_;
    BigInt den_;  // always 1 over F_p
};

inline FieldElement FieldSpec::element(long long value) const { return element(BigInt(value)); }

}  // namespace jointslab
