#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "starmat/errors.hpp"
#include "starmat/hbar_poly.hpp"
#include "starmat/phase_poly.hpp"
#include "starmat/random_poly.hpp"

using namespace starmat;

namespace {

PhasePoly x() { return PhasePoly::variable(1, VarRef::x()); }
PhasePoly p() { return PhasePoly::variable(1, VarRef::p()); }
PhasePoly h() { return PhasePoly::hbar(1); }
PhasePoly one() { return PhasePoly::constant(1, Rational(1)); }
// c * p^a x^b h^e
PhasePoly mono(long a, long b, long e, Rational c = Rational(1)) {
    return PhasePoly::plane_monomial(a, b, e, c);
}

}  // namespace

TEST_CASE("rational canonical form") {
    Rational r(6, 8);
    CHECK(r.num() == 3);
    CHECK(r.den() == 4);
    CHECK(Rational(-6, -8) == Rational(3, 4));
    CHECK(Rational(6, -8).num() == -3);
    CHECK(Rational(6, -8).den() == 4);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, 4) + Rational(1, 4) == Rational(1));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK((Rational(1, 2) / Rational(1, 4)) == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
    CHECK(Rational(-7, 2).to_string() == "-7/2");
}

TEST_CASE("integer combinatorics helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 7) == 0);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(5, 0) == 1);
    CHECK(falling_factorial(2, 5) == 0);
    CHECK(pow2(6) == 64);
}

TEST_CASE("hbar polynomial basics") {
    HbarPoly z;
    CHECK(z.is_zero());
    CHECK(!z.valuation().has_value());  // +infinity by convention
    CHECK(z.to_string() == "0");

    HbarPoly a = HbarPoly::term(2, Rational(3)) + HbarPoly::constant(Rational(1, 2));
    CHECK(a.valuation() == 0);
    CHECK(a.degree() == 2);
    CHECK(a.to_string() == "1/2 + 3*h^2");
    CHECK((a - a).is_zero());

    HbarPoly b = HbarPoly::term(1, Rational(1));
    CHECK(b.valuation() == 1);
    CHECK((a * b).valuation() == 1);
    CHECK(b.pow(3) == HbarPoly::term(3, Rational(1)));
    CHECK((HbarPoly::constant(Rational(1)) - HbarPoly::term(1, Rational(2))).to_string() ==
          "1 - 2*h");
}

TEST_CASE("phase polynomial canonical form is insertion-order independent") {
    std::vector<PhasePoly> parts = {mono(1, 2, 0), mono(0, 1, 1, Rational(-1)),
                                    mono(0, 0, 0, Rational(1, 2)), mono(2, 0, 3, Rational(7, 3))};
    std::sort(parts.begin(), parts.end(),
              [](const PhasePoly& a, const PhasePoly& b) { return a.to_string() < b.to_string(); });
    do {
        PhasePoly sum(1);
        for (const auto& t : parts) sum += t;
        PhasePoly reference = mono(1, 2, 0) + mono(0, 1, 1, Rational(-1)) +
                              mono(0, 0, 0, Rational(1, 2)) + mono(2, 0, 3, Rational(7, 3));
        CHECK(sum == reference);
        CHECK(sum.terms() == reference.terms());
    } while (std::next_permutation(
        parts.begin(), parts.end(),
        [](const PhasePoly& a, const PhasePoly& b) { return a.to_string() < b.to_string(); }));
}

TEST_CASE("addition examples") {
    CHECK((x() + p()) + (x() - p()) == x().scaled(Rational(2)));
    PhasePoly f = mono(1, 2, 0) - mono(2, 1, 1, Rational(5));
    CHECK(f + PhasePoly(1) == f);
    // (p x^2 - h x) + h x = p x^2, cross-checked against a re-expansion
    PhasePoly lhs = (mono(1, 2, 0) - mono(0, 1, 1)) + mono(0, 1, 1);
    CHECK(lhs == mono(1, 2, 0));
    CHECK(lhs == p() * x() * x());
    CHECK_THROWS_AS(PhasePoly::constant(1, Rational(1)) + PhasePoly::constant(2, Rational(1)),
                    DimensionError);
}

TEST_CASE("multiplication examples") {
    CHECK(x() * p() == mono(1, 1, 0));
    CHECK((x() + h()) * (x() + h()) == mono(0, 2, 0) + mono(0, 1, 1, Rational(2)) + mono(0, 0, 2));
    CHECK(p() * (x() * x()) == mono(1, 2, 0));
    CHECK_THROWS_AS(PhasePoly::constant(1, Rational(1)) * PhasePoly::constant(2, Rational(1)),
                    DimensionError);
}

TEST_CASE("multiplication is commutative, associative, distributive") {
    SeedStream rng(7);
    for (int t = 0; t < 200; ++t) {
        PhasePoly f = random_poly(6, 1, false, rng);
        PhasePoly g = random_poly(6, 1, false, rng);
        PhasePoly k = random_poly(6, 1, false, rng);
        CHECK(f * g == g * f);
        CHECK((f * g) * k == f * (g * k));
        CHECK(f * (g + k) == f * g + f * k);
    }
}

TEST_CASE("partial derivatives") {
    CHECK(partial_derivative(x() * x(), VarRef::x(), 2) == one().scaled(Rational(2)));
    CHECK(partial_derivative(mono(1, 2, 0), VarRef::p()) == mono(0, 2, 0));
    CHECK(partial_derivative(x() * x(), VarRef::x(), 3).is_zero());
    // h is a constant for differentiation
    CHECK(partial_derivative(mono(0, 1, 3), VarRef::x()) == mono(0, 0, 3));
    CHECK_THROWS_AS(partial_derivative(x(), VarRef::x(2)), DimensionError);
}

TEST_CASE("partial derivative satisfies the Leibniz rule") {
    SeedStream rng(11);
    for (int t = 0; t < 100; ++t) {
        PhasePoly f = random_poly(5, 1, false, rng);
        PhasePoly g = random_poly(5, 1, false, rng);
        for (VarRef v : {VarRef::x(), VarRef::p()}) {
            CHECK(partial_derivative(f * g, v) ==
                  partial_derivative(f, v) * g + f * partial_derivative(g, v));
        }
    }
}

TEST_CASE("exp of the mixed derivative on monomials") {
    const HbarPoly half_h = HbarPoly::term(1, Rational(1, 2));
    const HbarPoly minus_half_h = HbarPoly::term(1, Rational(-1, 2));

    // x^b is annihilated by d/dp
    CHECK(apply_exp_mixed_diff(mono(0, 3, 0), half_h) == mono(0, 3, 0));
    // p x -> p x + h/2
    CHECK(apply_exp_mixed_diff(mono(1, 1, 0), half_h) ==
          mono(1, 1, 0) + mono(0, 0, 1, Rational(1, 2)));
    // p^2 x^2 with lambda = -h/2 -> p^2 x^2 - 2 h p x + h^2/2
    CHECK(apply_exp_mixed_diff(mono(2, 2, 0), minus_half_h) ==
          mono(2, 2, 0) + mono(1, 1, 1, Rational(-2)) + mono(0, 0, 2, Rational(1, 2)));
    CHECK_THROWS_AS(apply_exp_mixed_diff(PhasePoly::constant(2, Rational(1)), half_h),
                    UnsupportedDimensionError);
}

TEST_CASE("exp of the mixed derivative agrees with the brute-force operator sum") {
    SeedStream rng(13);
    for (int t = 0; t < 60; ++t) {
        PhasePoly f = random_poly(6, 1, false, rng);
        for (const HbarPoly& lam :
             {HbarPoly::term(1, Rational(1, 2)), HbarPoly::term(1, Rational(-1, 2)),
              HbarPoly::term(2, Rational(3)), HbarPoly::constant(Rational(-2, 3))}) {
            CHECK(apply_exp_mixed_diff(f, lam) == test::exp_mixed_oracle(f, lam));
        }
    }
}

TEST_CASE("exp of the mixed derivative is a one-parameter group") {
    SeedStream rng(17);
    const HbarPoly lam = HbarPoly::term(1, Rational(1, 2));
    for (int t = 0; t < 50; ++t) {
        PhasePoly f = random_poly(6, 1, false, rng);
        CHECK(apply_exp_mixed_diff(apply_exp_mixed_diff(f, lam),
                                   HbarPoly::term(1, Rational(-1, 2))) == f);
        CHECK(apply_exp_mixed_diff(f, HbarPoly{}) == f);
    }
}

TEST_CASE("coefficient extraction in h") {
    PhasePoly f = mono(1, 2, 0) - mono(0, 1, 1);  // p x^2 - h x
    CHECK(coeff_of_hbar(f, 0) == mono(1, 2, 0));
    CHECK(coeff_of_hbar(f, 1) == mono(0, 1, 0, Rational(-1)));
    CHECK(coeff_of_hbar(x() * x(), 5).is_zero());
}

TEST_CASE("negate_hbar flips odd powers of h") {
    PhasePoly f = mono(1, 1, 1, Rational(2)) + mono(0, 0, 2, Rational(3)) + mono(2, 0, 0);
    CHECK(negate_hbar(f) == mono(1, 1, 1, Rational(-2)) + mono(0, 0, 2, Rational(3)) +
                                mono(2, 0, 0));
    CHECK(negate_hbar(negate_hbar(f)) == f);
}

TEST_CASE("canonical text rendering") {
    CHECK(PhasePoly(1).to_string() == "0");
    CHECK((mono(1, 2, 0) - mono(0, 1, 1)).to_string() == "p*x^2 - h*x");
    CHECK((x() * p() + h().scaled(Rational(1, 2))).to_string() == "p*x + 1/2*h");
    CHECK((x() * x() + p() * p()).to_string() == "x^2 + p^2");
    CHECK(coeff_of_hbar(mono(1, 2, 0) - mono(0, 1, 1), 1).to_string() == "-x");
    CHECK(one().to_string() == "1");
    CHECK(mono(0, 0, 0, Rational(-3, 2)).to_string() == "-3/2");
    CHECK(mono(0, 0, 2, Rational(1)).to_string() == "h^2");
    // two (x,p) pairs get indexed names
    PhasePoly f2 = PhasePoly::variable(2, VarRef::x(2)) * PhasePoly::variable(2, VarRef::p(1));
    CHECK(f2.to_string() == "p1*x2");
}

TEST_CASE("exponent overflow fails loudly") {
    PhasePoly big = PhasePoly::monomial(1, {PhasePoly::kMaxExponent, 0, 0}, Rational(1));
    CHECK_THROWS_AS(big * big, ExponentOverflowError);
    CHECK_THROWS_AS(
        PhasePoly::monomial(1, {PhasePoly::kMaxExponent + 1, 0, 0}, Rational(1)),
        ExponentOverflowError);
}

TEST_CASE("hbar poly extraction from phase poly") {
    PhasePoly f = PhasePoly::from_hbar_poly(1, HbarPoly::term(2, Rational(5, 3)));
    CHECK(f.to_hbar_poly() == HbarPoly::term(2, Rational(5, 3)));
    CHECK_THROWS_AS((x() * h()).to_hbar_poly(), std::domain_error);
}
