#include "jointslab/field.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace jointslab {

namespace {

bool bigint_is_prime(const BigInt& p) {
    if (p < 2) return false;
    for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        if (p == q) return true;
        if (p % q == 0) return false;
    }
    return boost::multiprecision::miller_rabin_test(p, 32);
}

BigInt mod_reduce(BigInt v, const BigInt& p) {
    v %= p;
    if (v < 0) v += p;
    return v;
}

}  // namespace

FieldSpec::FieldSpec(BigInt characteristic) : characteristic_(std::move(characteristic)) {
    if (characteristic_ == 0) return;
    if (!bigint_is_prime(characteristic_))
        throw FieldError("field characteristic must be 0 or a prime, got " + characteristic_.str());
}

FieldElement FieldSpec::zero() const { return FieldElement(*this, 0, 1); }

FieldElement FieldSpec::one() const { return FieldElement(*this, 1, 1); }

FieldElement FieldSpec::element(const BigInt& value) const {
    if (is_prime_field()) return FieldElement(*this, mod_reduce(value, characteristic_), 1);
    return FieldElement(*this, value, 1);
}

FieldElement FieldSpec::fraction(const BigInt& num, const BigInt& den) const {
    return element(num) / element(den);
}

FieldElement FieldSpec::parse(const std::string& text) const {
    auto parse_int = [](const std::string& s) {
        if (s.empty()) throw ParseError("empty field element");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw ParseError("bad field element '" + s + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw ParseError("bad field element '" + s + "'");
        return BigInt(s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return element(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return fraction(num, den);
}

void FieldElement::require_same_spec(const FieldElement& rhs) const {
    if (spec_ != rhs.spec_)
        throw FieldError("mixed-field arithmetic: characteristic " + spec_.characteristic().str() +
                         " vs " + rhs.spec_.characteristic().str());
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_spec(rhs);
    if (spec_.is_prime_field())
        return FieldElement(spec_, mod_reduce(num_ + rhs.num_, spec_.characteristic()), 1);
    BigInt num = num_ * rhs.den_ + rhs.num_ * den_;
    BigInt den = den_ * rhs.den_;
    BigInt g = gcd(num, den);
    if (g != 0) { num /= g; den /= g; }
    else den = 1;
    return FieldElement(spec_, std::move(num), std::move(den));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const { return *this + (-rhs); }

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_spec(rhs);
    if (spec_.is_prime_field())
        return FieldElement(spec_, mod_reduce(num_ * rhs.num_, spec_.characteristic()), 1);
    BigInt num = num_ * rhs.num_;
    BigInt den = den_ * rhs.den_;
    BigInt g = gcd(num, den);
    if (g != 0) { num /= g; den /= g; }
    else den = 1;
    return FieldElement(spec_, std::move(num), std::move(den));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const { return *this * rhs.inverse(); }

FieldElement FieldElement::operator-() const {
    if (spec_.is_prime_field())
        return FieldElement(spec_, mod_reduce(-num_, spec_.characteristic()), 1);
    return FieldElement(spec_, -num_, den_);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    if (spec_.is_prime_field()) {
        // Fermat: a^(p-2) = a^{-1} in F_p.
        const BigInt& p = spec_.characteristic();
        return FieldElement(spec_, boost::multiprecision::powm(num_, p - 2, p), 1);
    }
    if (num_ > 0) return FieldElement(spec_, den_, num_);
    return FieldElement(spec_, -den_, -num_);
}

FieldElement FieldElement::pow(unsigned long long exponent) const {
    FieldElement acc = spec_.one();
    FieldElement base = *this;
    while (exponent > 0) {
        if (exponent & 1) acc *= base;
        base *= base;
        exponent >>= 1;
    }
    return acc;
}

FieldElement FieldElement::pth_root() const {
    if (!spec_.is_prime_field())
        throw UnsupportedError("pth root requires positive characteristic");
    return *this;
}

bool FieldElement::operator<(const FieldElement& rhs) const {
    require_same_spec(rhs);
    // Cross-multiplied value comparison; denominators are positive.
    return num_ * rhs.den_ < rhs.num_ * den_;
}

std::string FieldElement::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

}  // namespace jointslab
