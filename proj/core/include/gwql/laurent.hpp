#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "gwql/rational.hpp"

namespace gwql {

/// Finite Laurent series in one formal variable with exact rational
/// coefficients. Coefficients are stored ascending from lowest_exponent();
/// exponents above truncation_order() are unknown. Exact values (Laurent
/// polynomials, nothing truncated away) carry truncation_order() == kExact.
///
/// Truncation is always explicit and propagates through arithmetic; nothing
/// is ever silently dropped inside the known window.
///
/// The localization engine instantiates this type with the variable u = 1/λ,
/// so the λ = ∞ expansions of kernels and twist factors are ascending series
/// here; λ-exponents are negated at serialization boundaries.
class LaurentSeries {
public:
    static constexpr long kExact = std::numeric_limits<long>::max() / 4;

    LaurentSeries() : lo_(0), trunc_(kExact) {}

    static LaurentSeries zero() { return LaurentSeries(); }
    static LaurentSeries zero_truncated(long trunc);
    static LaurentSeries constant(Rational c) { return monomial(0, std::move(c)); }
    static LaurentSeries monomial(long exp, Rational c);
    /// Coefficients ascending from `lo`; unknown above `trunc`.
    static LaurentSeries from_coefficients(long lo, std::vector<Rational> coeffs,
                                           long trunc = kExact);

    bool is_exact() const { return trunc_ == kExact; }
    bool is_zero() const { return coeffs_.empty(); }
    /// True when the series is an exact constant (possibly zero).
    bool is_constant() const;
    /// Exact constant value; throws unless is_constant().
    Rational constant_value() const;

    long truncation_order() const { return trunc_; }
    /// Lowest stored (nonzero) exponent; throws on the zero series.
    long lowest_exponent() const;
    /// Highest stored (nonzero) exponent; throws on the zero series.
    long highest_exponent() const;

    /// Coefficient of the given exponent. Zero within the known window,
    /// throws InvalidInput above the truncation order.
    Rational coefficient(long exp) const;

    /// Nonzero terms, ascending exponent.
    std::vector<std::pair<long, Rational>> terms() const;

    LaurentSeries operator-() const;
    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }
    LaurentSeries& operator*=(const Rational& c);
    friend LaurentSeries operator*(LaurentSeries a, const Rational& c) { return a *= c; }
    friend LaurentSeries operator*(const Rational& c, LaurentSeries a) { return a *= c; }

    /// Multiplies by c·x^k.
    LaurentSeries shifted(long k, const Rational& c = Rational(1)) const;

    LaurentSeries pow(long e) const;

    /// Inverse b with (*this)·b == 1 through exponent `order`. Requires a
    /// nonzero leading coefficient (throws DivisionByZero otherwise). The
    /// result is exact when the input is an exact monomial.
    LaurentSeries inverted(long order) const;

    /// Drops knowledge above `order` (no-op if already coarser).
    LaurentSeries truncated(long order) const;

    /// Structural equality of normalized values (same coefficients and the
    /// same truncation order).
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

    /// True when a and b have identical coefficients for every exponent
    /// <= order (both must know the window; throws if either is coarser).
    static bool agree_through(const LaurentSeries& a, const LaurentSeries& b, long order);

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    /// Lowest exponent that could carry a nonzero coefficient (trunc_+1 for a
    /// truncated zero, kExact for the exact zero). Used by truncation math.
    long lo_bound() const;

    long lo_;
    std::vector<Rational> coeffs_;  // coeffs_[i] is the coefficient of x^(lo_+i)
    long trunc_;
};

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s);

}  // namespace gwql
