#include "gwql/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace gwql {

void LaurentSeries::normalize() {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    size_t tail = coeffs_.size();
    while (tail > lead && coeffs_[tail - 1].is_zero()) --tail;
    if (lead > 0 || tail < coeffs_.size()) {
        coeffs_ = std::vector<Rational>(coeffs_.begin() + lead, coeffs_.begin() + tail);
        lo_ += static_cast<long>(lead);
    }
}

long LaurentSeries::lo_bound() const {
    if (!coeffs_.empty()) return lo_;
    return is_exact() ? kExact : trunc_ + 1;
}

LaurentSeries LaurentSeries::zero_truncated(long trunc) {
    LaurentSeries s;
    s.trunc_ = trunc;
    return s;
}

LaurentSeries LaurentSeries::monomial(long exp, Rational c) {
    LaurentSeries s;
    if (!c.is_zero()) {
        s.lo_ = exp;
        s.coeffs_.push_back(std::move(c));
    }
    return s;
}

LaurentSeries LaurentSeries::from_coefficients(long lo, std::vector<Rational> coeffs, long trunc) {
    LaurentSeries s;
    s.lo_ = lo;
    s.coeffs_ = std::move(coeffs);
    s.trunc_ = trunc;
    s.normalize();
    if (!s.coeffs_.empty() && trunc != kExact &&
        s.lo_ + static_cast<long>(s.coeffs_.size()) - 1 > trunc)
        throw InvalidInput("coefficients extend beyond the declared truncation order");
    return s;
}

bool LaurentSeries::is_constant() const {
    if (!is_exact()) return false;
    if (coeffs_.empty()) return true;
    return coeffs_.size() == 1 && lo_ == 0;
}

Rational LaurentSeries::constant_value() const {
    if (!is_constant()) throw InvalidInput("series is not an exact constant");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

long LaurentSeries::lowest_exponent() const {
    if (coeffs_.empty()) throw InvalidInput("zero series has no lowest exponent");
    return lo_;
}

long LaurentSeries::highest_exponent() const {
    if (coeffs_.empty()) throw InvalidInput("zero series has no highest exponent");
    return lo_ + static_cast<long>(coeffs_.size()) - 1;
}

Rational LaurentSeries::coefficient(long exp) const {
    if (exp > trunc_) throw InvalidInput("coefficient requested beyond truncation order");
    if (exp < lo_ || exp >= lo_ + static_cast<long>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(exp - lo_)];
}

std::vector<std::pair<long, Rational>> LaurentSeries::terms() const {
    std::vector<std::pair<long, Rational>> out;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) out.emplace_back(lo_ + static_cast<long>(i), coeffs_[i]);
    return out;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s(*this);
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
    long trunc = std::min(trunc_, o.trunc_);
    if (o.coeffs_.empty()) {
        trunc_ = trunc;
        if (!coeffs_.empty() && lo_ + static_cast<long>(coeffs_.size()) - 1 > trunc)
            coeffs_.resize(static_cast<size_t>(std::max<long>(0, trunc - lo_ + 1)));
        normalize();
        return *this;
    }
    long lo = coeffs_.empty() ? o.lo_ : std::min(lo_, o.lo_);
    long hi = o.lo_ + static_cast<long>(o.coeffs_.size()) - 1;
    if (!coeffs_.empty()) hi = std::max(hi, lo_ + static_cast<long>(coeffs_.size()) - 1);
    hi = std::min(hi, trunc);
    std::vector<Rational> out(static_cast<size_t>(std::max<long>(0, hi - lo + 1)));
    auto acc = [&](long base, const std::vector<Rational>& cs) {
        for (size_t i = 0; i < cs.size(); ++i) {
            long e = base + static_cast<long>(i);
            if (e < lo || e > hi) continue;
            out[static_cast<size_t>(e - lo)] += cs[i];
        }
    };
    acc(lo_, coeffs_);
    acc(o.lo_, o.coeffs_);
    lo_ = lo;
    coeffs_ = std::move(out);
    trunc_ = trunc;
    normalize();
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    // An exact zero annihilates regardless of the other factor's truncation.
    if (a.coeffs_.empty() && a.is_exact()) return LaurentSeries::zero();
    if (b.coeffs_.empty() && b.is_exact()) return LaurentSeries::zero();
    long trunc = LaurentSeries::kExact;
    if (!a.is_exact()) trunc = std::min(trunc, a.trunc_ + b.lo_bound());
    if (!b.is_exact()) trunc = std::min(trunc, b.trunc_ + a.lo_bound());
    if (a.coeffs_.empty() || b.coeffs_.empty()) return LaurentSeries::zero_truncated(trunc);

    long lo = a.lo_ + b.lo_;
    long hi = a.lo_ + static_cast<long>(a.coeffs_.size()) - 1 + b.lo_ +
              static_cast<long>(b.coeffs_.size()) - 1;
    hi = std::min(hi, trunc);
    if (hi < lo) return LaurentSeries::zero_truncated(trunc);
    std::vector<Rational> out(static_cast<size_t>(hi - lo + 1));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        long ea = a.lo_ + static_cast<long>(i);
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            long e = ea + b.lo_ + static_cast<long>(j);
            if (e > hi) break;
            if (b.coeffs_[j].is_zero()) continue;
            out[static_cast<size_t>(e - lo)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    LaurentSeries s;
    s.lo_ = lo;
    s.coeffs_ = std::move(out);
    s.trunc_ = trunc;
    s.normalize();
    return s;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& c) {
    if (c.is_zero()) {
        // Scaling by an exact 0 keeps the truncation of *this: the unknown
        // tail is annihilated too, so the result is exactly zero.
        *this = zero();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

LaurentSeries LaurentSeries::shifted(long k, const Rational& c) const {
    LaurentSeries s(*this);
    s.lo_ += k;
    if (!s.is_exact()) s.trunc_ += k;
    s *= c;
    return s;
}

LaurentSeries LaurentSeries::pow(long e) const {
    if (e < 0) throw InvalidInput("negative series power (use inverted())");
    LaurentSeries acc = constant(Rational(1));
    for (long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

LaurentSeries LaurentSeries::inverted(long order) const {
    if (coeffs_.empty() || coeffs_[0].is_zero())
        throw DivisionByZero("inverting a series with zero leading coefficient");
    const Rational& c = coeffs_[0];
    if (is_exact() && coeffs_.size() == 1) return monomial(-lo_, c.inverse());
    // a = c·x^lo (1 + t), 1/a = x^{-lo}/c · 1/(1 + t). The geometric series
    // is honest only as far as a's own knowledge allows.
    long rel = is_exact() ? order : std::min(order, trunc_ - lo_);
    if (rel < 0) return zero_truncated(rel - lo_);
    std::vector<Rational> t(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) t[i - 1] = coeffs_[i] / c;
    // inv[j] solved from (1 + t) * inv = 1, ascending.
    std::vector<Rational> inv(static_cast<size_t>(rel) + 1);
    inv[0] = Rational(1);
    for (long j = 1; j <= rel; ++j) {
        Rational s(0);
        for (long i = 1; i <= j && i <= static_cast<long>(t.size()); ++i)
            s += t[static_cast<size_t>(i - 1)] * inv[static_cast<size_t>(j - i)];
        inv[static_cast<size_t>(j)] = -s;
    }
    for (auto& x : inv) x /= c;
    return from_coefficients(-lo_, std::move(inv), rel - lo_);
}

LaurentSeries LaurentSeries::truncated(long order) const {
    if (order >= trunc_) return *this;
    LaurentSeries s(*this);
    s.trunc_ = order;
    if (!s.coeffs_.empty()) {
        long keep = order - s.lo_ + 1;
        if (keep <= 0)
            s.coeffs_.clear(), s.lo_ = 0;
        else if (keep < static_cast<long>(s.coeffs_.size()))
            s.coeffs_.resize(static_cast<size_t>(keep));
    }
    s.normalize();
    return s;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.lo_ == b.lo_ && a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
}

bool LaurentSeries::agree_through(const LaurentSeries& a, const LaurentSeries& b, long order) {
    if (a.trunc_ < order || b.trunc_ < order)
        throw InvalidInput("series not known through the requested order");
    long lo = std::min(a.lo_bound(), b.lo_bound());
    if (lo > order) return true;
    for (long e = lo; e <= order; ++e)
        if (a.coefficient(e) != b.coefficient(e)) return false;
    return true;
}

std::string LaurentSeries::to_string(const std::string& var) const {
    std::ostringstream os;
    auto ts = terms();
    if (ts.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (auto& [e, c] : ts) {
            if (!first) os << " + ";
            first = false;
            os << c.to_string();
            if (e != 0) os << "*" << var << "^" << e;
        }
    }
    if (!is_exact()) os << " + O(" << var << "^" << (trunc_ + 1) << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s) {
    return os << s.to_string();
}

}  // namespace gwql
