#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jointslab/geometry.hpp"
#include "jointslab/polynomial.hpp"
#include "support/random_instances.hpp"

using namespace jointslab;
namespace ts = jointslab::testsupport;

namespace {

MultivariatePolynomial mono(const FieldSpec& f, std::initializer_list<unsigned> exps,
                            long long coeff = 1) {
    MultivariatePolynomial out(f, exps.size());
    out.add_term(ExponentVector(exps), f.element(coeff));
    return out;
}

std::vector<FieldElement> at(const FieldSpec& f, std::initializer_list<long long> coords) {
    std::vector<FieldElement> v;
    for (long long c : coords) v.push_back(f.element(c));
    return v;
}

}  // namespace

TEST_CASE("evaluation") {
    FieldSpec f7 = FieldSpec::prime(7);
    // x1*x2 + x3 at (1,2,3).
    MultivariatePolynomial f(f7, 3);
    f.add_term({1, 1, 0}, f7.one());
    f.add_term({0, 0, 1}, f7.one());
    CHECK(f.evaluate(at(f7, {1, 2, 3})) == f7.element(5));

    MultivariatePolynomial zero(f7, 3);
    CHECK(zero.evaluate(at(f7, {4, 5, 6})).is_zero());
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);

    // x^5 - x vanishes everywhere on F_5 without being the zero polynomial.
    FieldSpec f5 = FieldSpec::prime(5);
    MultivariatePolynomial frob(f5, 1);
    frob.add_term({5}, f5.one());
    frob.add_term({1}, -f5.one());
    CHECK(!frob.is_zero());
    for (long long a = 0; a < 5; ++a) CHECK(frob.evaluate({f5.element(a)}).is_zero());
}

TEST_CASE("terms with cancelling coefficients vanish from storage") {
    FieldSpec q = FieldSpec::rationals();
    MultivariatePolynomial f(q, 2);
    f.add_term({1, 0}, q.element(3));
    f.add_term({1, 0}, q.element(-3));
    CHECK(f.is_zero());
    f.add_term({0, 0}, q.zero());
    CHECK(f.terms().empty());
}

TEST_CASE("first-order partials") {
    // d/dx of x^p dies in characteristic p.
    FieldSpec f5 = FieldSpec::prime(5);
    CHECK(hasse_partial(mono(f5, {5}), 0).is_zero());

    FieldSpec q = FieldSpec::rationals();
    auto d = hasse_partial(mono(q, {2, 1}), 0);  // x1^2 x2 -> 2 x1 x2
    CHECK(d == mono(q, {1, 1}, 2));

    FieldSpec f3 = FieldSpec::prime(3);
    CHECK(hasse_partial(mono(f3, {3}), 0).is_zero());
    CHECK(hasse_partial(mono(f3, {2}), 0) == mono(f3, {1}, 2));
}

TEST_CASE("gradients") {
    FieldSpec q = FieldSpec::rationals();
    for (const auto& g : gradient(mono(q, {0, 0}, 9))) CHECK(g.is_zero());

    MultivariatePolynomial f(q, 2);
    f.add_term({1, 1}, q.one());
    auto grad = gradient(f);
    REQUIRE(grad.size() == 2);
    CHECK(grad[0] == mono(q, {0, 1}));
    CHECK(grad[1] == mono(q, {1, 0}));

    FieldSpec f3 = FieldSpec::prime(3);
    MultivariatePolynomial frob(f3, 2);
    frob.add_term({3, 0}, f3.one());
    frob.add_term({0, 3}, f3.one());
    for (const auto& g : gradient(frob)) CHECK(g.is_zero());
}

TEST_CASE("restriction to lines") {
    FieldSpec f5 = FieldSpec::prime(5);
    Point zero(f5, at(f5, {0, 0, 0}));
    Line x_axis(zero, at(f5, {1, 0, 0}));
    CHECK(restrict_to_line(mono(f5, {0, 0, 1}), x_axis).is_zero());

    Line diag(zero, at(f5, {1, 1, 0}));
    auto r = restrict_to_line(mono(f5, {1, 1, 0}), diag);  // x1 x2 -> t^2
    REQUIRE(r.degree() == 2);
    CHECK(r.coeffs()[2] == f5.one());
    CHECK(r.coeffs()[0].is_zero());
    CHECK(r.coeffs()[1].is_zero());

    // x1^2 + x2 along base (0,1,0), direction (1,0,0): t^2 + 1.
    MultivariatePolynomial f(f5, 3);
    f.add_term({2, 0, 0}, f5.one());
    f.add_term({0, 1, 0}, f5.one());
    Line l(Point(f5, at(f5, {0, 1, 0})), at(f5, {1, 0, 0}));
    auto r2 = restrict_to_line(f, l);
    REQUIRE(r2.degree() == 2);
    CHECK(r2.coeffs()[0] == f5.one());
    CHECK(r2.coeffs()[1].is_zero());
    CHECK(r2.coeffs()[2] == f5.one());
}

TEST_CASE("pth roots") {
    FieldSpec f2 = FieldSpec::prime(2);
    MultivariatePolynomial f(f2, 2);
    f.add_term({2, 0}, f2.one());
    f.add_term({0, 2}, f2.one());
    auto g = pth_root(f);
    MultivariatePolynomial expect(f2, 2);
    expect.add_term({1, 0}, f2.one());
    expect.add_term({0, 1}, f2.one());
    CHECK(g == expect);
    CHECK(poly_pow(g, 2) == f);

    CHECK(pth_root(MultivariatePolynomial(f2, 3)).is_zero());

    FieldSpec f5 = FieldSpec::prime(5);
    CHECK(pth_root(mono(f5, {5}, 3)) == mono(f5, {1}, 3));

    CHECK_THROWS_AS(pth_root(mono(f5, {3}, 1)), StructureError);
    CHECK_THROWS_AS(pth_root(mono(FieldSpec::rationals(), {2}, 1)), UnsupportedError);
}

TEST_CASE("powers") {
    FieldSpec f2 = FieldSpec::prime(2);
    MultivariatePolynomial sum(f2, 2);
    sum.add_term({1, 0}, f2.one());
    sum.add_term({0, 1}, f2.one());
    auto sq = poly_pow(sum, 2);
    MultivariatePolynomial expect(f2, 2);
    expect.add_term({2, 0}, f2.one());
    expect.add_term({0, 2}, f2.one());
    CHECK(sq == expect);  // the cross term carries coefficient 2 = 0

    FieldSpec q = FieldSpec::rationals();
    std::mt19937_64 rng(77);
    auto f = ts::random_poly(q, 2, 3, 4, rng);
    CHECK(poly_pow(f, 1) == f);
    CHECK(poly_pow(f, 0).evaluate(at(q, {3, 4})) == q.one());

    MultivariatePolynomial lin(q, 1);
    lin.add_term({1}, q.one());
    lin.add_term({0}, q.one());
    auto cube = poly_pow(lin, 3);
    CHECK(cube.terms().size() == 4);
    CHECK(cube.terms().at({0}) == q.one());
    CHECK(cube.terms().at({1}) == q.element(3));
    CHECK(cube.terms().at({2}) == q.element(3));
    CHECK(cube.terms().at({3}) == q.one());
}

TEST_CASE("univariate basics") {
    FieldSpec f5 = FieldSpec::prime(5);
    UnivariatePolynomial padded(f5, {f5.one(), f5.zero(), f5.zero()});
    CHECK(padded.degree() == 0);

    UnivariatePolynomial frob(f5, {f5.zero(), f5.zero(), f5.zero(), f5.zero(), f5.zero(),
                                   f5.one()});  // t^5
    CHECK(frob.derivative().is_zero());

    UnivariatePolynomial poly(f5, {f5.element(1), f5.element(2), f5.element(3)});
    CHECK(poly.evaluate(f5.element(2)) == f5.element(2));  // 1 + 4 + 12 = 17 = 2
    auto d = poly.derivative();                            // 2 + 6t = 2 + t
    REQUIRE(d.degree() == 1);
    CHECK(d.coeffs()[0] == f5.element(2));
    CHECK(d.coeffs()[1] == f5.element(1));
}

TEST_CASE("derivative identities on random instances") {
    std::mt19937_64 rng(123456);
    std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(2),
                                  FieldSpec::prime(3), FieldSpec::prime(5)};
    for (const auto& f : fields) {
        for (int trial = 0; trial < 100; ++trial) {
            auto a = ts::random_poly(f, 3, 4, 4, rng);
            auto b = ts::random_poly(f, 3, 4, 4, rng);
            for (std::size_t i = 0; i < 3; ++i) {
                // Linearity and the Leibniz rule.
                CHECK(hasse_partial(a + b, i) == hasse_partial(a, i) + hasse_partial(b, i));
                CHECK(hasse_partial(a * b, i) ==
                      hasse_partial(a, i) * b + a * hasse_partial(b, i));
            }
            // The restriction's derivative is the direction paired with the
            // gradient along the line.
            Line l = ts::random_line(f, 3, rng);
            FieldElement t = ts::random_element(f, rng);
            auto lhs = restrict_to_line(a, l).derivative().evaluate(t);
            auto grad = gradient(a);
            FieldElement rhs = f.zero();
            auto x = l.at(t);
            for (std::size_t i = 0; i < 3; ++i)
                rhs += l.dir()[i] * grad[i].evaluate(x.coords());
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("vanishing gradient characterizations") {
    std::mt19937_64 rng(31);
    // Characteristic zero: only constants have zero gradient.
    FieldSpec q = FieldSpec::rationals();
    for (int trial = 0; trial < 100; ++trial) {
        auto f = ts::random_poly(q, 3, 4, 5, rng);
        bool grad_zero = true;
        for (const auto& g : gradient(f))
            if (!g.is_zero()) grad_zero = false;
        CHECK(grad_zero == (f.degree() <= 0));
    }
    // Characteristic p: zero gradient iff every exponent is a multiple of p,
    // in which case the polynomial is an exact p-th power.
    for (long long p : {2, 3, 5}) {
        FieldSpec f = FieldSpec::prime(p);
        for (int trial = 0; trial < 100; ++trial) {
            auto a = ts::random_poly(f, 2, 2 * static_cast<unsigned>(p), 5, rng);
            bool grad_zero = true;
            for (const auto& g : gradient(a))
                if (!g.is_zero()) grad_zero = false;
            bool all_multiples = true;
            for (const auto& [exps, coeff] : a.terms())
                for (unsigned e : exps)
                    if (e % p != 0) all_multiples = false;
            CHECK(grad_zero == all_multiples);
            if (all_multiples)
                CHECK(poly_pow(pth_root(a), static_cast<unsigned long long>(p)) == a);

            // Exact p-th powers land on the zero-gradient side by
            // construction, and the root recovers the base.
            auto g = ts::random_poly(f, 2, 2, 3, rng);
            auto gp = poly_pow(g, static_cast<unsigned long long>(p));
            for (const auto& comp : gradient(gp)) CHECK(comp.is_zero());
            CHECK(pth_root(gp) == g);
        }
    }
}
