#include <doctest.h>

#include <random>

#include "gwql/laurent.hpp"

using gwql::LaurentSeries;
using gwql::Rational;

namespace {
LaurentSeries var(long e = 1) { return LaurentSeries::monomial(e, Rational(1)); }
}

TEST_CASE("multiplication of exact Laurent polynomials") {
    // x^{-1} * x = 1
    CHECK(var(-1) * var(1) == LaurentSeries::constant(Rational(1)));
    // (1 + x)(1 - x) = 1 - x^2
    LaurentSeries a = LaurentSeries::constant(Rational(1)) + var();
    LaurentSeries b = LaurentSeries::constant(Rational(1)) - var();
    LaurentSeries p = a * b;
    CHECK(p.coefficient(0) == Rational(1));
    CHECK(p.coefficient(1) == Rational(0));
    CHECK(p.coefficient(2) == Rational(-1));
    CHECK(p.is_exact());
}

TEST_CASE("truncation propagates through multiplication") {
    // (x^{-2}, trunc 0) * (x^3, trunc 5) -> x, trunc 3
    LaurentSeries a = LaurentSeries::monomial(-2, Rational(1)).truncated(0);
    LaurentSeries b = LaurentSeries::monomial(3, Rational(1)).truncated(5);
    LaurentSeries p = a * b;
    CHECK(p.truncation_order() == 3);
    CHECK(p.lowest_exponent() == 1);
    CHECK(p.coefficient(1) == Rational(1));
    CHECK_THROWS_AS(p.coefficient(4), gwql::InvalidInput);

    // Direct polynomial multiplication oracle on the known window.
    LaurentSeries exact = LaurentSeries::monomial(-2, Rational(1)) * LaurentSeries::monomial(3, Rational(1));
    CHECK(LaurentSeries::agree_through(p, exact, 3));
}

TEST_CASE("inversion: monomial") {
    // invert(x, 3) in the u = 1/λ chart is the exact monomial λ^{-1}.
    LaurentSeries inv = var(-1).inverted(3);
    CHECK(inv == var(1));
    CHECK(inv.is_exact());
}

TEST_CASE("inversion: geometric series") {
    // λ - c in the u-chart: u^{-1} - c; inverse through order 3 gives
    // u + c u^2 + c^2 u^3 + c^3 u^4  (λ^{-1} + cλ^{-2} + c²λ^{-3} + c³λ^{-4}).
    Rational c(7, 2);
    LaurentSeries a = var(-1) - LaurentSeries::constant(c);
    LaurentSeries inv = a.inverted(3);
    CHECK(inv.lowest_exponent() == 1);
    CHECK(inv.truncation_order() == 4);
    CHECK(inv.coefficient(1) == Rational(1));
    CHECK(inv.coefficient(2) == c);
    CHECK(inv.coefficient(3) == c * c);
    CHECK(inv.coefficient(4) == c * c * c);
    CHECK(LaurentSeries::agree_through(a * inv, LaurentSeries::constant(Rational(1)), 3));
}

TEST_CASE("inversion: 1 + x + x^2 checked by re-multiplication") {
    LaurentSeries a = LaurentSeries::from_coefficients(0, {Rational(1), Rational(1), Rational(1)});
    LaurentSeries inv2 = a.inverted(2);
    CHECK(inv2.coefficient(0) == Rational(1));
    CHECK(inv2.coefficient(1) == Rational(-1));
    CHECK(inv2.coefficient(2) == Rational(0));
    LaurentSeries inv4 = a.inverted(4);
    CHECK(inv4.coefficient(3) == Rational(1));  // the x^3 term appears at higher order
    CHECK(inv4.coefficient(4) == Rational(-1));
    CHECK(LaurentSeries::agree_through(a * inv4, LaurentSeries::constant(Rational(1)), 4));
    CHECK_THROWS_AS(LaurentSeries::zero().inverted(2), gwql::DivisionByZero);
}

TEST_CASE("mul-invert identity on randomized series") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coeff(-9, 9), lo(-3, 2), len(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> cs;
        long n = len(rng);
        for (long i = 0; i < n; ++i) cs.emplace_back(coeff(rng));
        if (cs[0].is_zero()) cs[0] = Rational(1);
        LaurentSeries a = LaurentSeries::from_coefficients(lo(rng), std::move(cs));
        long k = 4;
        LaurentSeries prod = a * a.inverted(k);
        CHECK(LaurentSeries::agree_through(prod, LaurentSeries::constant(Rational(1)), k));
    }
}

TEST_CASE("addition respects windows and normalization") {
    LaurentSeries a = LaurentSeries::from_coefficients(-1, {Rational(2), Rational(3)});
    LaurentSeries b = LaurentSeries::from_coefficients(-1, {Rational(-2), Rational(1)});
    LaurentSeries s = a + b;
    CHECK(s.lowest_exponent() == 0);  // leading zeros trimmed
    CHECK(s.coefficient(0) == Rational(4));
    LaurentSeries t = a + LaurentSeries::zero_truncated(0);
    CHECK(t.truncation_order() == 0);
    CHECK(t.coefficient(-1) == Rational(2));
    CHECK(t.coefficient(0) == Rational(3));
}

TEST_CASE("exact zero annihilates even truncated series") {
    LaurentSeries t = var(2).truncated(5);
    LaurentSeries z = LaurentSeries::zero() * t;
    CHECK(z.is_zero());
    CHECK(z.is_exact());
}
