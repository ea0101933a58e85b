#include "gwql/hypergeom.hpp"

#include <numeric>

#include "gwql/errors.hpp"
#include "gwql/laurent.hpp"

namespace gwql {

namespace {

// Polynomial in H modulo H^{N+1}, coefficients Laurent polynomials in hbar.
using HPoly = std::vector<LaurentSeries>;

HPoly hpoly_one(int N) {
    HPoly p(static_cast<size_t>(N) + 1, LaurentSeries::zero());
    p[0] = LaurentSeries::constant(Rational(1));
    return p;
}

// p *= (a*H + s), s a Laurent polynomial in hbar.
void hpoly_mul_linear(HPoly& p, const Rational& a, const LaurentSeries& s) {
    HPoly out(p.size(), LaurentSeries::zero());
    for (size_t j = 0; j < p.size(); ++j) {
        out[j] += p[j] * s;
        if (j + 1 < p.size()) out[j + 1] += p[j] * a;
    }
    p = std::move(out);
}

void hpoly_mul(HPoly& p, const HPoly& q) {
    HPoly out(p.size(), LaurentSeries::zero());
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; i + j < p.size(); ++j) out[i + j] += p[i] * q[j];
    p = std::move(out);
}

// The degree-d term I_d of the I-function.
HPoly i_term(int N, const std::vector<int>& ks, int d) {
    HPoly p = hpoly_one(N);
    for (int k : ks)
        for (long m = 1; m <= static_cast<long>(k) * d; ++m)
            hpoly_mul_linear(p, Rational(k), LaurentSeries::monomial(1, Rational(m)));
    // 1/(H + m hbar)^{N+1} expanded mod H^{N+1}.
    for (long m = 1; m <= d; ++m) {
        HPoly inv(static_cast<size_t>(N) + 1, LaurentSeries::zero());
        for (long j = 0; j <= N; ++j)
            inv[static_cast<size_t>(j)] =
                LaurentSeries::monomial(-(N + 1) - j, binomial(-(N + 1), j) * Rational(m).pow(-(N + 1) - j));
        hpoly_mul(p, inv);
    }
    return p;
}

// --- truncated power series in q over the rationals (mirror-map path) ---

struct QSeries {
    std::vector<Rational> c;  // index = q-power

    explicit QSeries(size_t order) : c(order + 1, Rational(0)) {}
    size_t order() const { return c.size() - 1; }
};

QSeries qmul(const QSeries& a, const QSeries& b) {
    QSeries out(a.order());
    for (size_t i = 0; i <= a.order(); ++i)
        for (size_t j = 0; i + j <= a.order(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    return out;
}

QSeries qdiv(const QSeries& a, const QSeries& b) {
    if (b.c[0].is_zero()) throw DivisionByZero("q-series division by zero constant term");
    QSeries out(a.order());
    for (size_t n = 0; n <= a.order(); ++n) {
        Rational s = a.c[n];
        for (size_t i = 1; i <= n; ++i) s -= b.c[i] * out.c[n - i];
        out.c[n] = s / b.c[0];
    }
    return out;
}

QSeries qexp(const QSeries& a) {
    if (!a.c[0].is_zero()) throw InvalidInput("qexp needs zero constant term");
    // e' = a' e, coefficientwise.
    QSeries out(a.order());
    out.c[0] = Rational(1);
    for (size_t n = 1; n <= a.order(); ++n) {
        Rational s(0);
        for (size_t k = 1; k <= n; ++k) s += Rational(static_cast<long>(k)) * a.c[k] * out.c[n - k];
        out.c[n] = s / Rational(static_cast<long>(n));
    }
    return out;
}

// f(g(x)) for g with zero constant term.
QSeries qcompose(const QSeries& f, const QSeries& g) {
    if (!g.c[0].is_zero()) throw InvalidInput("qcompose needs zero constant term");
    QSeries out(f.order());
    // Horner from the top coefficient down.
    for (size_t i = f.order() + 1; i-- > 0;) {
        out = qmul(out, g);
        out.c[0] += f.c[i];
    }
    return out;
}

}  // namespace

Rational hypergeom_genus0_oracle(int N, const std::vector<int>& twist_degrees, int d) {
    if (N < 1) throw InvalidInput("need N >= 1");
    if (d < 1) throw InvalidInput("need degree >= 1");
    int total = 0;
    for (int k : twist_degrees) {
        if (k < 1) throw InvalidInput("oracle twists must be positive line bundle degrees");
        total += k;
    }
    if (total > N + 1) throw InvalidInput("non-convex twist: sum of degrees exceeds N+1");

    const int r = static_cast<int>(twist_degrees.size());
    const int nu = N + 1 - total;
    Rational prod_k(1);
    for (int k : twist_degrees) prod_k *= Rational(k);

    if (nu >= 1) {
        // Fano-type: no mirror map; read the invariant straight off I_d.
        int slot = N - 1 - r;
        if (slot < 0 || slot > N) return Rational(0);
        HPoly Id = i_term(N, twist_degrees, d);
        Rational w = Id[static_cast<size_t>(slot)].coefficient(-2);
        return prod_k * w / Rational(d);
    }

    // Calabi-Yau type (sum k_i = N+1): every I_d is homogeneous of degree 0
    // in (H, hbar), so hbar can be set to 1; the mirror map is nontrivial.
    if (r != N - 3) return Rational(0);  // virtual dimension N-3-r is nonzero

    const size_t D = static_cast<size_t>(d);
    // I_k(q) = coefficient of H^k with hbar = 1, as a q-series.
    std::vector<QSeries> I;
    for (int k = 0; k <= 3; ++k) I.emplace_back(D);
    I[0].c[0] = Rational(1);
    for (int dd = 1; dd <= d; ++dd) {
        HPoly Idd = i_term(N, twist_degrees, dd);
        for (int k = 0; k <= 3; ++k) {
            Rational v(0);
            for (const auto& [e, c] : Idd[static_cast<size_t>(k)].terms()) v += c;  // hbar = 1
            I[static_cast<size_t>(k)].c[static_cast<size_t>(dd)] = v;
        }
    }

    QSeries g = qdiv(I[1], I[0]);
    g.c[0] = Rational(0);  // I_1 has no constant term; keep it exact
    // x(q) = q e^{g(q)}; invert to q(x) by fixed-point iteration.
    QSeries eg = qexp(g);
    QSeries x(D);
    for (size_t i = 1; i <= D; ++i) x.c[i] = eg.c[i - 1];  // x = q*e^g
    QSeries q_of_x(D);
    q_of_x.c[1] = Rational(1);
    for (size_t it = 0; it < D + 1; ++it) {
        // q <- x * e^{-g(q)}
        QSeries gq = qcompose(g, q_of_x);
        for (auto& cc : gq.c) cc = -cc;
        QSeries e = qexp(gq);
        QSeries next(D);
        for (size_t i = 1; i <= D; ++i) next.c[i] = e.c[i - 1];
        q_of_x = next;
    }

    // H^2 slot: I_2/I_0 = g^2/2 + W(x(q)).
    QSeries psi = qdiv(I[2], I[0]);
    QSeries g2 = qmul(g, g);
    for (size_t i = 0; i <= D; ++i) psi.c[i] -= g2.c[i] / Rational(2);
    QSeries W = qcompose(psi, q_of_x);

    // H^3 slot consistency: I_3/I_0 = g^3/6 + g·W(x(q)) + V(x(q)) with
    // V_d = -2 W_d / d. A failure here means the extraction itself broke.
    {
        QSeries v = qdiv(I[3], I[0]);
        QSeries g3 = qmul(g2, g);
        QSeries Wq = qcompose(W, x);
        QSeries gW = qmul(g, Wq);
        for (size_t i = 0; i <= D; ++i) v.c[i] -= g3.c[i] / Rational(6) + gW.c[i];
        QSeries V = qcompose(v, q_of_x);
        for (size_t dd = 1; dd <= D; ++dd)
            if (V.c[dd] != Rational(-2) * W.c[dd] / Rational(static_cast<long>(dd)))
                throw Error("hypergeometric oracle: dilaton slot mismatch");
    }

    return prod_k * W.c[D] / Rational(d);
}

}  // namespace gwql
