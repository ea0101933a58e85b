#pragma once

#include <map>
#include <shared_mutex>
#include <vector>

#include "gwql/rational.hpp"

namespace gwql {

/// psi/lambda_1 monomial on Mbar_{g,n}, g <= 1. psi_exponents has one entry
/// per marking; lambda1_exponent is only meaningful in genus 1 (lambda_1^2
/// vanishes there, so any exponent >= 2 integrates to 0).
struct HodgeMonomial {
    int genus = 0;
    std::vector<long> psi_exponents;
    long lambda1_exponent = 0;
};

/// Exact integrals of psi- and lambda_1-monomials over Mbar_{0,n} and
/// Mbar_{1,n}.
///
/// Genus 0 is the closed multinomial form; genus 1 reduces by the string and
/// dilaton equations to two base constants,
///   int_{Mbar_{1,1}} psi_1 and int_{Mbar_{1,1}} lambda_1,
/// both 1/24. Every genus-1 value the engine consumes is produced from those
/// two constants by the reductions; the constructor takes them as parameters
/// so the relation verifiers can run their sensitivity check (perturbing
/// either constant must break the genus-1 relations).
///
/// The memo table allows concurrent reads with serialized inserts.
class HodgeTable {
public:
    HodgeTable() : HodgeTable(Rational(1, 24), Rational(1, 24)) {}
    HodgeTable(Rational base_psi, Rational base_lambda1)
        : base_psi_(std::move(base_psi)), base_lambda1_(std::move(base_lambda1)) {}

    /// int_{Mbar_{0,n}} prod psi_i^{a_i}: (n-3)!/prod(a_i!) when the
    /// exponents fill the dimension n-3, else 0. Throws InvalidInput for
    /// n < 3 (unstable space).
    Rational psi_integral_g0(const std::vector<long>& psi_exponents) const;

    /// int_{Mbar_{1,n}} prod psi_i^{a_i} lambda_1^b. Zero on dimension
    /// mismatch and for b >= 2; throws InvalidInput for n < 1 or negative
    /// exponents.
    Rational hodge_integral_g1(const std::vector<long>& psi_exponents, long lambda1_exponent) const;

    /// Dispatch on genus; the localization engine's single entry point.
    Rational integral(const HodgeMonomial& m) const;

    const Rational& base_psi() const { return base_psi_; }
    const Rational& base_lambda1() const { return base_lambda1_; }

private:
    using Key = std::pair<std::vector<long>, long>;  // sorted exponents, b
    Rational g1_reduced(std::vector<long> sorted_exps, long b) const;

    Rational base_psi_;
    Rational base_lambda1_;
    mutable std::shared_mutex mutex_;
    mutable std::map<Key, Rational> memo_;
};

}  // namespace gwql
