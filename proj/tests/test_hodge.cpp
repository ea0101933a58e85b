#include <doctest.h>

#include <functional>
#include <vector>

#include "gwql/hodge.hpp"

using gwql::HodgeTable;
using gwql::Rational;

namespace {

// Independent genus-0 oracle: reduce by the string equation alone, never
// using the closed multinomial form the implementation uses.
Rational g0_string_oracle(std::vector<long> exps) {
    long n = static_cast<long>(exps.size());
    long sum = 0;
    for (long a : exps) sum += a;
    if (sum != n - 3) return Rational(0);
    if (n == 3) return Rational(1);
    // Find a zero exponent (one must exist: sum = n-3 < n) and apply string.
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] != 0) continue;
        std::vector<long> rest;
        for (size_t j = 0; j < exps.size(); ++j)
            if (j != i) rest.push_back(exps[j]);
        Rational v(0);
        for (size_t j = 0; j < rest.size(); ++j) {
            if (rest[j] == 0) continue;
            std::vector<long> next = rest;
            --next[j];
            v += g0_string_oracle(next);
        }
        return v;
    }
    return Rational(0);
}

void enumerate_exponents(long n, long budget, std::vector<long>& cur,
                         const std::function<void(const std::vector<long>&)>& f) {
    if (static_cast<long>(cur.size()) == n) {
        f(cur);
        return;
    }
    for (long a = 0; a <= budget; ++a) {
        cur.push_back(a);
        enumerate_exponents(n, budget - a, cur, f);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("genus 0 psi integrals: small values") {
    HodgeTable t;
    CHECK(t.psi_integral_g0({0, 0, 0}) == Rational(1));
    CHECK(t.psi_integral_g0({1, 0, 0, 0}) == Rational(1));
    CHECK(t.psi_integral_g0({2, 0, 0, 0, 0}) == Rational(1));
    CHECK(t.psi_integral_g0({1, 1, 0, 0, 0}) == Rational(2));
    CHECK(t.psi_integral_g0({1, 1, 1, 0, 0, 0}) == Rational(6));
    CHECK(t.psi_integral_g0({5, 0, 0}) == Rational(0));  // dimension mismatch
    CHECK_THROWS_AS(t.psi_integral_g0({0, 0}), gwql::InvalidInput);
}

TEST_CASE("genus 0 psi integrals agree with the string-equation oracle") {
    HodgeTable t;
    for (long n = 3; n <= 6; ++n) {
        std::vector<long> cur;
        enumerate_exponents(n, n - 3, cur, [&](const std::vector<long>& exps) {
            CHECK(t.psi_integral_g0(exps) == g0_string_oracle(exps));
        });
    }
}

TEST_CASE("genus 1 base values and small table") {
    HodgeTable t;
    CHECK(t.hodge_integral_g1({1}, 0) == Rational(1, 24));
    CHECK(t.hodge_integral_g1({0}, 1) == Rational(1, 24));
    CHECK(t.hodge_integral_g1({2, 0}, 0) == Rational(1, 24));
    CHECK(t.hodge_integral_g1({1, 1}, 0) == Rational(1, 24));
    CHECK(t.hodge_integral_g1({1, 0}, 1) == Rational(1, 24));
    // Values derived by hand via string/dilaton: <tau_2 tau_1 tau_0>_1 = 2/24.
    CHECK(t.hodge_integral_g1({2, 1, 0}, 0) == Rational(1, 12));
    CHECK(t.hodge_integral_g1({1, 1, 1}, 0) == Rational(1, 12));
    CHECK(t.hodge_integral_g1({3, 0, 0}, 0) == Rational(1, 24));
    CHECK(t.hodge_integral_g1({2, 2, 0, 0}, 0) == Rational(1, 6));
}

TEST_CASE("lambda_1 power >= 2 vanishes, dimension mismatches vanish") {
    HodgeTable t;
    CHECK(t.hodge_integral_g1({0, 0}, 2) == Rational(0));
    CHECK(t.hodge_integral_g1({5}, 17) == Rational(0));
    CHECK(t.hodge_integral_g1({1}, 1) == Rational(0));   // 1 + 1 != 1
    CHECK(t.hodge_integral_g1({0, 0}, 0) == Rational(0));
    CHECK_THROWS_AS(t.hodge_integral_g1({}, 0), gwql::InvalidInput);
}

TEST_CASE("string equation holds across the genus 1 table") {
    HodgeTable t;
    std::vector<long> cur;
    for (long n = 1; n <= 5; ++n) {
        for (long b = 0; b <= 1; ++b) {
            enumerate_exponents(n, n - b, cur, [&](const std::vector<long>& exps) {
                long sum = 0;
                for (long a : exps) sum += a;
                if (sum + b != n) return;
                // Append a psi^0 marking and reduce by hand.
                std::vector<long> plus = exps;
                plus.push_back(0);
                Rational lhs = t.hodge_integral_g1(plus, b);
                Rational rhs(0);
                for (size_t j = 0; j < exps.size(); ++j) {
                    if (exps[j] == 0) continue;
                    std::vector<long> next = exps;
                    --next[j];
                    rhs += t.hodge_integral_g1(next, b);
                }
                CHECK(lhs == rhs);
            });
        }
    }
}

TEST_CASE("dilaton equation holds across the genus 1 table") {
    HodgeTable t;
    std::vector<long> cur;
    for (long n = 1; n <= 5; ++n) {
        for (long b = 0; b <= 1; ++b) {
            enumerate_exponents(n, n - b, cur, [&](const std::vector<long>& exps) {
                long sum = 0;
                for (long a : exps) sum += a;
                if (sum + b != n) return;
                std::vector<long> plus = exps;
                plus.push_back(1);
                CHECK(t.hodge_integral_g1(plus, b) ==
                      Rational(static_cast<long>(n)) * t.hodge_integral_g1(exps, b));
            });
        }
    }
}

TEST_CASE("every value comes from the two base constants") {
    // Doubling the base constants doubles every table value.
    HodgeTable t, s(Rational(1, 12), Rational(1, 12));
    CHECK(s.hodge_integral_g1({2, 1, 0}, 0) == Rational(2) * t.hodge_integral_g1({2, 1, 0}, 0));
    CHECK(s.hodge_integral_g1({1, 0, 0}, 1) == Rational(2) * t.hodge_integral_g1({1, 0, 0}, 1));
    // Perturbing only the lambda_1 constant moves only lambda_1 values.
    HodgeTable p(Rational(1, 24), Rational(1, 23));
    CHECK(p.hodge_integral_g1({1, 1}, 0) == t.hodge_integral_g1({1, 1}, 0));
    CHECK(p.hodge_integral_g1({1, 0}, 1) != t.hodge_integral_g1({1, 0}, 1));
}
