#include "gwql/engine.hpp"

#include <algorithm>
#include <chrono>
#include <future>

#include "gwql/cache.hpp"

namespace gwql {

namespace {

// k*alpha_i + w*lambda as a series in u = 1/lambda.
LaurentSeries ell_series(int k, int w, const Rational& alpha_i) {
    LaurentSeries s = LaurentSeries::constant(Rational(k) * alpha_i);
    if (w != 0) s += LaurentSeries::monomial(-1, Rational(w));
    return s;
}

// Inverse of f, known through u-exponent `trunc`.
LaurentSeries inv_to(const LaurentSeries& f, long trunc) {
    if (f.is_zero()) throw NonGenericWeights("vanishing factor in a localization denominator");
    return f.inverted(trunc + f.lowest_exponent());
}

LaurentSeries pow_series(const LaurentSeries& f, long e, long trunc) {
    if (e == 0) return LaurentSeries::constant(Rational(1));
    LaurentSeries base = e > 0 ? f : inv_to(f, trunc);
    LaurentSeries acc = base;
    for (long i = 1; i < std::labs(e); ++i) acc = acc * base;
    return acc;
}

// a + b*lambda_1 with lambda_1^2 = 0.
struct HodgeLinear {
    LaurentSeries a = LaurentSeries::constant(Rational(1));
    LaurentSeries b = LaurentSeries::zero();

    HodgeLinear& operator*=(const HodgeLinear& o) {
        b = a * o.b + b * o.a;
        a = a * o.a;
        return *this;
    }
};

using PsiPoly = std::vector<LaurentSeries>;  // index = power of this factor's psi

struct VertexIntegralCtx {
    const HodgeTable* hodge;
    int genus;
    long dim;
    const std::vector<PsiPoly>* factors;
    const HodgeLinear* hl;
    LaurentSeries total = LaurentSeries::zero();
    std::vector<long> exps;

    void rec(size_t idx, long sum, const LaurentSeries& coeff) {
        if (coeff.is_zero() && coeff.is_exact()) return;
        if (idx == factors->size()) {
            if (genus == 0) {
                Rational h = hodge->psi_integral_g0(exps);
                if (!h.is_zero()) total += coeff * h;
            } else {
                Rational h0 = hodge->hodge_integral_g1(exps, 0);
                if (!h0.is_zero()) total += coeff * hl->a * h0;
                Rational h1 = hodge->hodge_integral_g1(exps, 1);
                if (!h1.is_zero()) total += coeff * hl->b * h1;
            }
            return;
        }
        const PsiPoly& p = (*factors)[idx];
        for (long a = 0; a <= dim - sum && a < static_cast<long>(p.size()); ++a) {
            if (p[static_cast<size_t>(a)].is_zero() && p[static_cast<size_t>(a)].is_exact()) continue;
            exps.push_back(a);
            rec(idx + 1, sum + a, coeff * p[static_cast<size_t>(a)]);
            exps.pop_back();
        }
    }
};

Rational rational_or_degenerate(const Rational& r) {
    if (r.is_zero()) throw NonGenericWeights("vanishing rational denominator");
    return r;
}

}  // namespace

Engine::Engine(EngineConfig cfg) : Engine(std::move(cfg), std::make_shared<HodgeTable>(), nullptr) {}

Engine::Engine(EngineConfig cfg, std::shared_ptr<const HodgeTable> hodge, ResultCache* cache)
    : cfg_(std::move(cfg)), hodge_(std::move(hodge)), cache_(cache) {
    if (cfg_.retry_limit < 1) throw InvalidInput("retry_limit must be >= 1");
}

Rational Engine::tangent_chern_at_fixed_point(const SpaceDescriptor& space,
                                              const WeightVector& weights, int fixed_point,
                                              int k) {
    const int N = space.N;
    if (fixed_point < 0 || fixed_point > N) throw InvalidInput("fixed point out of range");
    if (k < 0 || k > N) throw InvalidInput("Chern index out of range");
    // Elementary symmetric polynomial in the tangent weights.
    std::vector<Rational> e(static_cast<size_t>(k) + 1, Rational(0));
    e[0] = Rational(1);
    for (int j = 0; j <= N; ++j) {
        if (j == fixed_point) continue;
        Rational w = weights[fixed_point] - weights[j];
        for (long t = k; t >= 1; --t)
            e[static_cast<size_t>(t)] += e[static_cast<size_t>(t - 1)] * w;
    }
    return e[static_cast<size_t>(k)];
}

LaurentSeries Engine::graph_contribution(const LocGraph& graph, const InvariantDescriptor& desc,
                                         const WeightVector& alpha) const {
    const int N = desc.space.N;
    if (alpha.size() != N + 1) throw InvalidInput("weight vector size does not match P^N");

    for (const auto& t : desc.twists) {
        if (t.bundle_degree == 0 && t.lambda_weight == 0) {
            // Euler class of a trivial bundle: the whole invariant vanishes
            // in Direct mode and is undefined in Inverse mode.
            if (t.mode == EulerMode::Direct) return LaurentSeries::zero();
            throw InvalidInput("inverse twist by the non-equivariant trivial bundle");
        }
    }

    // Global u-truncation: generous bound on the largest u-exponent a
    // nonzero coefficient of the final value can carry.
    long U = desc.vdim_untwisted() + cfg_.truncation_margin + N + 4;
    for (const auto& ins : desc.insertions)
        if (ins.kernel) U += ins.kernel->second + 1;
    for (const auto& t : desc.twists)
        U += static_cast<long>(std::abs(t.bundle_degree)) * desc.degree + 2;

    const auto& vs = graph.vertices();
    const auto& es = graph.edges();
    auto fp_alpha = [&](int v) -> const Rational& { return alpha[vs[static_cast<size_t>(v)].fixed_point]; };

    LaurentSeries S = LaurentSeries::constant(Rational(1, graph.automorphism_order()));

    // Applies one twist factor raised to a signed H0-ledger exponent,
    // honoring the twist's direct/inverse mode.
    auto apply_twist_factor = [&](const LaurentSeries& f, long exp, EulerMode mode) {
        long eff = (mode == EulerMode::Direct) ? exp : -exp;
        if (eff != 0) S = S * pow_series(f, eff, U);
    };

    // Edge factors.
    for (const auto& e : es) {
        int i = vs[static_cast<size_t>(e.v)].fixed_point;
        int j = vs[static_cast<size_t>(e.w)].fixed_point;
        long d = e.degree;
        // H0(C_e, f*TP^N): divide by the moving weights.
        Rational edge(1);
        for (long a = 0; a <= d; ++a) {
            for (int k = 0; k <= N; ++k) {
                if ((a == d && k == i) || (a == 0 && k == j)) continue;
                Rational w = (Rational(a) * alpha[i] + Rational(d - a) * alpha[j]) / Rational(d) -
                             alpha[k];
                edge *= rational_or_degenerate(w);
            }
        }
        S *= edge.inverse();
        // Twist bundles restricted to the edge.
        for (const auto& t : desc.twists) {
            long m = static_cast<long>(t.bundle_degree) * d;
            if (m >= 0) {
                for (long a = 0; a <= m; ++a) {
                    Rational c = (Rational(a) * alpha[i] + Rational(m - a) * alpha[j]) / Rational(d);
                    LaurentSeries f = LaurentSeries::constant(c);
                    if (t.lambda_weight != 0)
                        f += LaurentSeries::monomial(-1, Rational(t.lambda_weight));
                    apply_twist_factor(f, +1, t.mode);
                }
            } else {
                for (long a = m + 1; a <= -1; ++a) {
                    Rational c = (Rational(a) * alpha[i] + Rational(m - a) * alpha[j]) / Rational(d);
                    LaurentSeries f = LaurentSeries::constant(c);
                    if (t.lambda_weight != 0)
                        f += LaurentSeries::monomial(-1, Rational(t.lambda_weight));
                    apply_twist_factor(f, -1, t.mode);
                }
            }
        }
    }

    // Flag tangent weights per vertex.
    std::vector<std::vector<Rational>> flag_omega(vs.size());
    for (const auto& e : es) {
        Rational wv = (fp_alpha(e.v) - fp_alpha(e.w)) / Rational(e.degree);
        flag_omega[static_cast<size_t>(e.v)].push_back(wv);
        flag_omega[static_cast<size_t>(e.w)].push_back(-wv);
    }

    auto scalar_insertion = [&](const InsertionDescriptor& ins, int fp) {
        Rational s(0);
        Rational p(1);
        for (size_t r = 0; r < ins.h_poly.size(); ++r) {
            s += ins.h_poly[r] * p;
            p *= alpha[fp];
        }
        for (int k : ins.chern_factors)
            s *= tangent_chern_at_fixed_point(desc.space, alpha, fp, k);
        return s;
    };

    auto classes = graph.classify();

    for (size_t vi = 0; vi < vs.size(); ++vi) {
        const LocVertex& v = vs[vi];
        const int fp = v.fixed_point;
        const Rational& ai = alpha[fp];
        const auto& omegas = flag_omega[vi];

        switch (classes[vi]) {
            case VertexClass::UnmarkedTail: {
                S *= omegas[0];
                break;
            }
            case VertexClass::MarkedTail: {
                int label = *v.markings.begin();
                const InsertionDescriptor& ins = desc.insertions.at(static_cast<size_t>(label - 1));
                Rational psi_val = -omegas[0];
                S *= scalar_insertion(ins, fp) * psi_val.pow(ins.psi_power);
                if (ins.kernel) {
                    // 1/(lambda - c*H - psi) at H = alpha_i, psi = -omega.
                    Rational q = ins.kernel->first * ai - omegas[0];
                    LaurentSeries ker = LaurentSeries::zero();
                    Rational qk(1);
                    for (long k = 0; k <= ins.kernel->second; ++k) {
                        ker += LaurentSeries::monomial(k + 1, qk);
                        qk *= q;
                    }
                    S = S * ker;
                }
                break;
            }
            case VertexClass::Joint: {
                S *= alpha.tangent_euler(fp);
                S *= rational_or_degenerate(omegas[0] + omegas[1]).inverse();
                for (const auto& t : desc.twists)
                    apply_twist_factor(ell_series(t.bundle_degree, t.lambda_weight, ai), -1, t.mode);
                break;
            }
            case VertexClass::StableModuli: {
                long val = static_cast<long>(omegas.size());
                Rational ei = alpha.tangent_euler(fp);
                S *= ei.pow(val - 1);
                for (const auto& t : desc.twists)
                    apply_twist_factor(ell_series(t.bundle_degree, t.lambda_weight, ai), 1 - val,
                                       t.mode);

                long s_pts = val + static_cast<long>(v.markings.size());
                long dim = (v.genus == 0) ? s_pts - 3 : s_pts;

                std::vector<PsiPoly> factors;
                factors.reserve(static_cast<size_t>(s_pts));
                for (const Rational& om : omegas) {
                    // 1/(omega - psi) = sum psi^k / omega^{k+1}.
                    rational_or_degenerate(om);
                    PsiPoly p(static_cast<size_t>(dim) + 1);
                    Rational c = om.inverse();
                    for (long k = 0; k <= dim; ++k) {
                        p[static_cast<size_t>(k)] = LaurentSeries::constant(c);
                        c /= om;
                    }
                    factors.push_back(std::move(p));
                }
                for (int label : v.markings) {
                    const InsertionDescriptor& ins =
                        desc.insertions.at(static_cast<size_t>(label - 1));
                    Rational sc = scalar_insertion(ins, fp);
                    PsiPoly p(static_cast<size_t>(dim) + 1, LaurentSeries::zero());
                    long p0 = ins.psi_power;
                    if (!ins.kernel) {
                        if (p0 <= dim) p[static_cast<size_t>(p0)] = LaurentSeries::constant(sc);
                    } else {
                        const Rational q = ins.kernel->first * ai;
                        const long K = ins.kernel->second;
                        // (q + psi)^k expanded: psi^j picks binom(k,j) q^{k-j} u^{k+1}.
                        for (long j = 0; p0 + j <= dim; ++j) {
                            LaurentSeries cj = LaurentSeries::zero();
                            for (long k = j; k <= K; ++k)
                                cj += LaurentSeries::monomial(k + 1, binomial(k, j) * q.pow(k - j));
                            p[static_cast<size_t>(p0 + j)] = cj * sc;
                        }
                    }
                    factors.push_back(std::move(p));
                }

                HodgeLinear hl;
                if (v.genus == 1) {
                    // e(H^1(C, f*TP^N)) = prod_{j != fp} (alpha_fp - alpha_j - lambda_1).
                    for (int j = 0; j <= N; ++j) {
                        if (j == fp) continue;
                        HodgeLinear f;
                        f.a = LaurentSeries::constant(alpha.difference(fp, j));
                        f.b = LaurentSeries::constant(Rational(-1));
                        hl *= f;
                    }
                    for (const auto& t : desc.twists) {
                        LaurentSeries ell = ell_series(t.bundle_degree, t.lambda_weight, ai);
                        HodgeLinear f;
                        if (t.mode == EulerMode::Inverse) {
                            // multiply by (ell - lambda_1)
                            f.a = ell;
                            f.b = LaurentSeries::constant(Rational(-1));
                        } else {
                            // divide by (ell - lambda_1): ell^{-1} + ell^{-2} lambda_1
                            LaurentSeries inv = inv_to(ell, U);
                            f.a = inv;
                            f.b = inv * inv;
                        }
                        hl *= f;
                    }
                }

                VertexIntegralCtx ctx;
                ctx.hodge = hodge_.get();
                ctx.genus = v.genus;
                ctx.dim = dim;
                ctx.factors = &factors;
                ctx.hl = &hl;
                ctx.rec(0, 0, LaurentSeries::constant(Rational(1)));
                S = S * ctx.total;
                break;
            }
        }
        if (S.is_zero() && S.is_exact()) return S;
    }

    return S;
}

LaurentSeries Engine::sum_graphs(const std::vector<LocGraph>& graphs,
                                 const InvariantDescriptor& desc,
                                 const WeightVector& weights) const {
    int threads = std::max(1, cfg_.threads);
    if (threads == 1 || graphs.size() < 4) {
        LaurentSeries total = LaurentSeries::zero();
        for (const auto& g : graphs) total += graph_contribution(g, desc, weights);
        return total;
    }
    size_t chunk = (graphs.size() + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
    std::vector<std::future<LaurentSeries>> parts;
    for (size_t begin = 0; begin < graphs.size(); begin += chunk) {
        size_t end = std::min(graphs.size(), begin + chunk);
        parts.push_back(std::async(std::launch::async, [this, &graphs, &desc, &weights, begin, end] {
            LaurentSeries acc = LaurentSeries::zero();
            for (size_t i = begin; i < end; ++i)
                acc += graph_contribution(graphs[i], desc, weights);
            return acc;
        }));
    }
    LaurentSeries total = LaurentSeries::zero();
    for (auto& p : parts) total += p.get();
    return total;
}

LaurentSeries Engine::gw_invariant_with_weights(const InvariantDescriptor& desc,
                                                const WeightVector& weights,
                                                EngineStats* stats) const {
    InvariantDescriptor d = desc;
    d.normalize();
    if (d.genus < 0 || d.genus > 1) throw InvalidInput("unsupported genus (engine covers g <= 1)");
    if (d.degree < 1) throw InvalidInput("degree must be >= 1");
    auto t0 = std::chrono::steady_clock::now();
    auto graphs = enumerate_loc_graphs(d.space.N, d.degree, d.genus,
                                       static_cast<int>(d.insertions.size()));
    LaurentSeries total = sum_graphs(graphs, d, weights);
    if (stats) {
        stats->graph_count = static_cast<long>(graphs.size());
        stats->wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    return total;
}

LaurentSeries Engine::gw_invariant(const InvariantDescriptor& desc, EngineStats* stats) {
    InvariantDescriptor d = desc;
    d.normalize();
    if (d.genus < 0 || d.genus > 1) throw InvalidInput("unsupported genus (engine covers g <= 1)");
    if (d.degree < 1) throw InvalidInput("degree must be >= 1");
    const std::string key = d.canonical_key();
    {
        std::shared_lock lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            if (stats) *stats = EngineStats{};
            return it->second;
        }
    }
    if (cache_) {
        if (auto stored = cache_->get(key)) {
            LaurentSeries v = engine_value_from_json(nlohmann::json::parse(*stored));
            std::unique_lock lock(memo_mutex_);
            memo_.emplace(key, v);
            if (stats) *stats = EngineStats{};
            return v;
        }
    }

    auto t0 = std::chrono::steady_clock::now();
    auto graphs = enumerate_loc_graphs(d.space.N, d.degree, d.genus,
                                       static_cast<int>(d.insertions.size()));
    LaurentSeries total = LaurentSeries::zero();
    int retries = 0;
    bool done = false;
    for (int attempt = 0; attempt < cfg_.retry_limit && !done; ++attempt) {
        WeightVector w = WeightVector::random(d.space.N + 1,
                                              cfg_.weight_seed + 1000003ULL * static_cast<std::uint64_t>(attempt));
        try {
            total = sum_graphs(graphs, d, w);
            done = true;
        } catch (const NonGenericWeights&) {
            ++retries;
        }
    }
    if (!done) throw NonGenericWeights("weight draws exhausted the retry limit");

    if (stats) {
        stats->graph_count = static_cast<long>(graphs.size());
        stats->weight_retries = retries;
        stats->wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    {
        std::unique_lock lock(memo_mutex_);
        memo_.emplace(key, total);
    }
    if (cache_) cache_->put(key, engine_value_to_json(total).dump());
    return total;
}

bool Engine::weight_independence_check(const InvariantDescriptor& desc, int trials) {
    if (trials < 2) throw InvalidInput("weight independence needs >= 2 trials");
    InvariantDescriptor d = desc;
    d.normalize();
    std::vector<LaurentSeries> values;
    for (int i = 0; i < trials; ++i) {
        bool ok = false;
        for (int attempt = 0; attempt < cfg_.retry_limit && !ok; ++attempt) {
            WeightVector w = WeightVector::random(
                d.space.N + 1,
                cfg_.weight_seed + 7919ULL * static_cast<std::uint64_t>(i + 1) +
                    1000003ULL * static_cast<std::uint64_t>(attempt));
            try {
                values.push_back(gw_invariant_with_weights(d, w));
                ok = true;
            } catch (const NonGenericWeights&) {
            }
        }
        if (!ok) throw NonGenericWeights("weight draws exhausted the retry limit");
    }
    for (size_t i = 1; i < values.size(); ++i)
        if (!(values[i] == values[0])) return false;
    return true;
}

}  // namespace gwql
