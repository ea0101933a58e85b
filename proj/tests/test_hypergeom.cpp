#include <doctest.h>

#include "gwql/hypergeom.hpp"

using namespace gwql;

TEST_CASE("quintic numbers from the I-function with mirror map") {
    CHECK(hypergeom_genus0_oracle(4, {5}, 1) == Rational(2875));
    CHECK(hypergeom_genus0_oracle(4, {5}, 2) == Rational::from_string("4876875/8"));
    CHECK(hypergeom_genus0_oracle(4, {5}, 3) == Rational::from_string("8564575000/27"));
}

TEST_CASE("Fano-type cases need no mirror map") {
    CHECK(hypergeom_genus0_oracle(3, {3}, 1) == Rational(27));  // lines on a cubic surface
    // Degree-1 maps to P^1: the moduli is a reduced point.
    CHECK(hypergeom_genus0_oracle(1, {}, 1) == Rational(1));
    CHECK(hypergeom_genus0_oracle(1, {}, 2) == Rational(0));
    CHECK(hypergeom_genus0_oracle(2, {}, 1) == Rational(0));
    CHECK(hypergeom_genus0_oracle(4, {4}, 1) == Rational(0));
    CHECK(hypergeom_genus0_oracle(3, {2, 2}, 1) == Rational(0));
}

TEST_CASE("oracle input validation") {
    CHECK_THROWS_AS(hypergeom_genus0_oracle(4, {6}, 1), InvalidInput);      // non-convex
    CHECK_THROWS_AS(hypergeom_genus0_oracle(4, {5, 2}, 1), InvalidInput);   // non-convex
    CHECK_THROWS_AS(hypergeom_genus0_oracle(4, {0}, 1), InvalidInput);
    CHECK_THROWS_AS(hypergeom_genus0_oracle(4, {5}, 0), InvalidInput);
}
