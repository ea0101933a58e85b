#include "gwql/rational.hpp"

#include <ostream>

namespace gwql {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return inverse().pow(-e);
    mpq_class acc(1), base(v_);
    long n = e;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return Rational(std::move(acc));
}

Rational Rational::from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw InvalidInput("bad rational literal: " + s);
    if (v.get_den() == 0) throw DivisionByZero("rational literal with zero denominator: " + s);
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::to_string() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Rational binomial(long n, long k) {
    if (k < 0) return Rational(0);
    // Generalized binomial: n may be negative (used by series expansions).
    mpq_class acc(1);
    for (long i = 0; i < k; ++i) {
        acc *= mpq_class(n - i);
        acc /= mpq_class(i + 1);
    }
    return Rational(std::move(acc));
}

Rational factorial(long n) {
    if (n < 0) throw InvalidInput("factorial of negative integer");
    mpz_class acc;
    mpz_fac_ui(acc.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(acc));
}

}  // namespace gwql
