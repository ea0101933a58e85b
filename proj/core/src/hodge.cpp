#include "gwql/hodge.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace gwql {

namespace {
long checked_sum(const std::vector<long>& v) {
    long s = 0;
    for (long x : v) {
        if (x < 0) throw InvalidInput("negative psi exponent");
        s += x;
    }
    return s;
}
}  // namespace

Rational HodgeTable::psi_integral_g0(const std::vector<long>& psi_exponents) const {
    long n = static_cast<long>(psi_exponents.size());
    if (n < 3) throw InvalidInput("Mbar_{0,n} needs n >= 3");
    if (checked_sum(psi_exponents) != n - 3) return Rational(0);
    Rational v = factorial(n - 3);
    for (long a : psi_exponents) v /= factorial(a);
    return v;
}

Rational HodgeTable::hodge_integral_g1(const std::vector<long>& psi_exponents,
                                       long lambda1_exponent) const {
    long n = static_cast<long>(psi_exponents.size());
    if (n < 1) throw InvalidInput("Mbar_{1,n} needs n >= 1");
    if (lambda1_exponent < 0) throw InvalidInput("negative lambda_1 exponent");
    if (lambda1_exponent >= 2) return Rational(0);  // lambda_1^2 = 0 in genus 1
    if (checked_sum(psi_exponents) + lambda1_exponent != n) return Rational(0);

    std::vector<long> key = psi_exponents;
    std::sort(key.begin(), key.end());
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find({key, lambda1_exponent});
        if (it != memo_.end()) return it->second;
    }
    Rational v = g1_reduced(key, lambda1_exponent);
    std::unique_lock lock(mutex_);
    memo_.insert({{std::move(key), lambda1_exponent}, v});
    return v;
}

Rational HodgeTable::g1_reduced(std::vector<long> exps, long b) const {
    long n = static_cast<long>(exps.size());
    if (n == 1) return b == 1 ? base_lambda1_ : base_psi_;
    // exps is sorted ascending, so a zero exponent sits in front.
    if (exps[0] == 0) {
        // String equation: drop the psi^0 marking, lower each remaining
        // exponent in turn (lambda_1 pulls back under the forgetful map).
        std::vector<long> rest(exps.begin() + 1, exps.end());
        Rational v(0);
        for (size_t j = 0; j < rest.size(); ++j) {
            if (rest[j] == 0) continue;
            std::vector<long> next = rest;
            --next[j];
            v += hodge_integral_g1(next, b);
        }
        return v;
    }
    // Dilaton equation: a psi^1 marking contributes 2g - 2 + (n-1).
    auto it = std::find(exps.begin(), exps.end(), 1);
    if (it != exps.end()) {
        std::vector<long> rest;
        rest.reserve(exps.size() - 1);
        for (auto jt = exps.begin(); jt != exps.end(); ++jt)
            if (jt != it) rest.push_back(*jt);
        return Rational(n - 1) * hodge_integral_g1(rest, b);
    }
    // All exponents >= 2 would overshoot the dimension; the mismatch filter
    // above already returned 0.
    return Rational(0);
}

Rational HodgeTable::integral(const HodgeMonomial& m) const {
    if (m.genus == 0) {
        if (m.lambda1_exponent > 0) return Rational(0);  // rank-0 Hodge bundle
        return psi_integral_g0(m.psi_exponents);
    }
    if (m.genus == 1) return hodge_integral_g1(m.psi_exponents, m.lambda1_exponent);
    throw InvalidInput("Hodge table only covers genus <= 1");
}

}  // namespace gwql
