#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "starmat/errors.hpp"
#include "starmat/random_poly.hpp"
#include "starmat/star_product.hpp"

using namespace starmat;

namespace {

PhasePoly x() { return PhasePoly::variable(1, VarRef::x()); }
PhasePoly p() { return PhasePoly::variable(1, VarRef::p()); }
PhasePoly h() { return PhasePoly::hbar(1); }
PhasePoly one() { return PhasePoly::constant(1, Rational(1)); }
PhasePoly mono(long a, long b, long e, Rational c = Rational(1)) {
    return PhasePoly::plane_monomial(a, b, e, c);
}

}  // namespace

TEST_CASE("moyal product known values") {
    // p *_h x^2 = p x^2 - h x and x^2 *_h p = p x^2 + h x
    CHECK(moyal_product(p(), x() * x()) == mono(1, 2, 0) - mono(0, 1, 1));
    CHECK(moyal_product(x() * x(), p()) == mono(1, 2, 0) + mono(0, 1, 1));
    CHECK(moyal_product(x(), p()) == mono(1, 1, 0) + mono(0, 0, 1, Rational(1, 2)));
    CHECK(moyal_product(p(), x()) == mono(1, 1, 0) + mono(0, 0, 1, Rational(-1, 2)));
    PhasePoly f = mono(2, 1, 1, Rational(3, 2)) - mono(0, 3, 0);
    CHECK(moyal_product(one(), f) == f);
    CHECK(moyal_product(f, one()) == f);
    CHECK_THROWS_AS(moyal_product(one(), PhasePoly::constant(2, Rational(1))), DimensionError);
}

TEST_CASE("moyal product matches the independent binomial expansion") {
    SeedStream rng(23);
    for (int t = 0; t < 80; ++t) {
        PhasePoly f = random_poly(5, 1, false, rng);
        PhasePoly g = random_poly(5, 1, false, rng);
        CHECK(moyal_product(f, g) == test::moyal_plane_oracle(f, g));
    }
}

TEST_CASE("standard product known values") {
    CHECK(standard_product(x(), p()) == mono(1, 1, 0) + mono(0, 0, 1));
    CHECK(standard_product(p(), x()) == mono(1, 1, 0));
    PhasePoly f = mono(1, 2, 0) + mono(0, 0, 2, Rational(-1, 3));
    CHECK(standard_product(one(), f) == f);
    CHECK(standard_product(f, one()) == f);
    CHECK_THROWS_AS(
        standard_product(PhasePoly::constant(2, Rational(1)), PhasePoly::constant(2, Rational(1))),
        UnsupportedDimensionError);
}

TEST_CASE("standard product matches the independent expansion") {
    SeedStream rng(29);
    for (int t = 0; t < 80; ++t) {
        PhasePoly f = random_poly(5, 1, false, rng);
        PhasePoly g = random_poly(5, 1, false, rng);
        CHECK(standard_product(f, g) == test::standard_oracle(f, g));
    }
}

TEST_CASE("moyal commutator known values") {
    CHECK(moyal_commutator(x(), p()) == h());
    PhasePoly f = mono(1, 1, 1, Rational(5)) - mono(2, 0, 0);
    CHECK(moyal_commutator(f, f).is_zero());
    CHECK(moyal_commutator(p(), x() * x()) == mono(0, 1, 1, Rational(-2)));
}

TEST_CASE("poisson bracket known values and commutator limit") {
    CHECK(poisson_bracket(x(), p()) == one());
    PhasePoly f = mono(1, 2, 0) + mono(3, 1, 0, Rational(-2));
    CHECK(poisson_bracket(f, f).is_zero());
    CHECK(poisson_bracket(p(), x() * x()) == mono(0, 1, 0, Rational(-2)));
    // {f,g} is the h-linear part of the Moyal commutator for h-free inputs
    SeedStream rng(31);
    for (int t = 0; t < 60; ++t) {
        PhasePoly a = random_poly(4, 1, true, rng);
        PhasePoly b = random_poly(4, 1, true, rng);
        CHECK(poisson_bracket(a, b) == coeff_of_hbar(moyal_commutator(a, b), 1));
    }
    // and likewise on two pairs
    for (int t = 0; t < 20; ++t) {
        PhasePoly a = random_poly(3, 2, true, rng);
        PhasePoly b = random_poly(3, 2, true, rng);
        CHECK(poisson_bracket(a, b) == coeff_of_hbar(moyal_commutator(a, b), 1));
    }
}

TEST_CASE("gauge transforms") {
    CHECK(gauge_to_standard(p() * x()) == mono(1, 1, 0) + mono(0, 0, 1, Rational(1, 2)));
    CHECK(gauge_to_standard(mono(0, 4, 0)) == mono(0, 4, 0));
    SeedStream rng(37);
    for (int t = 0; t < 60; ++t) {
        PhasePoly f = random_poly(5, 1, false, rng);
        CHECK(gauge_to_moyal(gauge_to_standard(f)) == f);
        CHECK(gauge_to_standard(gauge_to_moyal(f)) == f);
    }
    CHECK_THROWS_AS(gauge_to_standard(PhasePoly::constant(2, Rational(1))),
                    UnsupportedDimensionError);
}

TEST_CASE("gauge equivalence intertwines the two products") {
    SeedStream rng(41);
    for (int t = 0; t < 80; ++t) {
        PhasePoly f = random_poly(4, 1, false, rng);
        PhasePoly g = random_poly(4, 1, false, rng);
        CHECK(standard_product(gauge_to_standard(f), gauge_to_standard(g)) ==
              gauge_to_standard(moyal_product(f, g)));
    }
}

TEST_CASE("associativity of both products") {
    SeedStream rng(43);
    for (int t = 0; t < 100; ++t) {
        PhasePoly f = random_poly(4, 1, false, rng);
        PhasePoly g = random_poly(4, 1, false, rng);
        PhasePoly k = random_poly(4, 1, false, rng);
        CHECK(moyal_product(moyal_product(f, g), k) == moyal_product(f, moyal_product(g, k)));
        CHECK(standard_product(standard_product(f, g), k) ==
              standard_product(f, standard_product(g, k)));
    }
}

TEST_CASE("associativity of the moyal product on two pairs") {
    SeedStream rng(47);
    for (int t = 0; t < 25; ++t) {
        PhasePoly f = random_poly(3, 2, false, rng);
        PhasePoly g = random_poly(3, 2, false, rng);
        PhasePoly k = random_poly(3, 2, false, rng);
        CHECK(moyal_product(moyal_product(f, g), k) == moyal_product(f, moyal_product(g, k)));
    }
}

TEST_CASE("unit law on two pairs") {
    SeedStream rng(53);
    const PhasePoly one2 = PhasePoly::constant(2, Rational(1));
    for (int t = 0; t < 50; ++t) {
        PhasePoly f = random_poly(4, 2, false, rng);
        CHECK(moyal_product(one2, f) == f);
        CHECK(moyal_product(f, one2) == f);
    }
}

TEST_CASE("classical and semiclassical limits") {
    SeedStream rng(59);
    for (int t = 0; t < 100; ++t) {
        PhasePoly f = random_poly(4, 1, true, rng);
        PhasePoly g = random_poly(4, 1, true, rng);
        for (auto* prod : {moyal_product, standard_product}) {
            PhasePoly fg = prod(f, g);
            CHECK(coeff_of_hbar(fg, 0) == f * g);
            CHECK(coeff_of_hbar(fg - prod(g, f), 1) == poisson_bracket(f, g));
        }
    }
}

TEST_CASE("general expansion agrees with the plane formula") {
    SeedStream rng(61);
    for (int t = 0; t < 80; ++t) {
        PhasePoly f = random_poly(5, 1, false, rng);
        PhasePoly g = random_poly(5, 1, false, rng);
        CHECK(moyal_product_general(f, g) == moyal_product_plane(f, g));
    }
}

TEST_CASE("substituting -h reverses the moyal product") {
    // brute force over all monomial pairs of degree <= 3 first
    for (long a1 = 0; a1 <= 3; ++a1)
        for (long b1 = 0; a1 + b1 <= 3; ++b1)
            for (long a2 = 0; a2 <= 3; ++a2)
                for (long b2 = 0; a2 + b2 <= 3; ++b2) {
                    PhasePoly f = mono(a1, b1, 0);
                    PhasePoly g = mono(a2, b2, 0);
                    CHECK(negate_hbar(moyal_product(f, g)) == moyal_product(g, f));
                }
    // then randomized
    SeedStream rng(67);
    for (int t = 0; t < 60; ++t) {
        PhasePoly f = random_poly(5, 1, true, rng);
        PhasePoly g = random_poly(5, 1, true, rng);
        CHECK(negate_hbar(moyal_product(f, g)) == moyal_product(g, f));
    }
}

TEST_CASE("moyal product on two pairs: canonical commutation relations") {
    const PhasePoly x1 = PhasePoly::variable(2, VarRef::x(1));
    const PhasePoly x2 = PhasePoly::variable(2, VarRef::x(2));
    const PhasePoly p1 = PhasePoly::variable(2, VarRef::p(1));
    const PhasePoly p2 = PhasePoly::variable(2, VarRef::p(2));
    const PhasePoly h2 = PhasePoly::hbar(2);
    CHECK(moyal_commutator(x1, p1) == h2);
    CHECK(moyal_commutator(x2, p2) == h2);
    CHECK(moyal_commutator(x1, p2).is_zero());
    CHECK(moyal_commutator(x1, x2).is_zero());
    CHECK(moyal_commutator(p1, p2).is_zero());
}
