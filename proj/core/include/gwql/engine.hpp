#pragma once

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <unordered_map>

#include "gwql/descriptor.hpp"
#include "gwql/hodge.hpp"
#include "gwql/loc_graph.hpp"
#include "gwql/weights.hpp"

namespace gwql {

class ResultCache;

struct EngineConfig {
    std::uint64_t weight_seed = 20260809;
    int retry_limit = 3;        // fresh weight draws on a non-generic denominator
    long truncation_margin = 8; // extra u-orders carried beyond the required bound
    int threads = 1;            // graph contributions are pure; > 1 splits the sum
};

struct EngineStats {
    long graph_count = 0;
    int weight_retries = 0;
    double wall_seconds = 0.0;
};

/// Exact virtual localization for twisted descendant GW invariants of P^N in
/// genus <= 1. Torus weights are specialized to generic rationals; the
/// fiberwise C* parameter λ stays formal, so values are Laurent series in λ
/// (stored in u = 1/λ) or plain rationals when nothing carries λ.
///
/// Conventions (certified end-to-end by the relation suite):
///  - tangent weights at the fixed point p_i are α_i − α_j, H|_{p_i} = α_i;
///  - the ψ class at a marking on an unstable edge end restricts to the
///    negative of the edge tangent weight;
///  - a contracted genus-1 vertex contributes e(H¹(C, f*TX)) =
///    ∏_{j≠i}(α_i − α_j − λ₁) and, per twist, an H¹ factor (kα_i + wλ − λ₁),
///    both integrated against the Mbar_{1,s} table;
///  - a twist inserts e(E) of the index bundle in Direct mode and e(E)^{-1}
///    in Inverse mode (the masterspace fixed-locus measure).
class Engine {
public:
    explicit Engine(EngineConfig cfg = {});
    Engine(EngineConfig cfg, std::shared_ptr<const HodgeTable> hodge, ResultCache* cache);

    /// k-th elementary symmetric polynomial in the tangent weights at a
    /// fixed point: the equivariant lift of c_k(TX). Throws for k outside
    /// [0, N].
    static Rational tangent_chern_at_fixed_point(const SpaceDescriptor& space,
                                                 const WeightVector& weights, int fixed_point,
                                                 int k);

    /// Contribution of one localization graph (markings already placed on
    /// the graph), including the 1/(aut · ∏d_e) measure. Throws
    /// NonGenericWeights when a denominator vanishes.
    LaurentSeries graph_contribution(const LocGraph& graph, const InvariantDescriptor& desc,
                                     const WeightVector& weights) const;

    /// Sum over all localization graphs and marking placements, computed
    /// with a fresh generic weight draw (retried on degeneracy), cached
    /// under the canonical key.
    LaurentSeries gw_invariant(const InvariantDescriptor& desc, EngineStats* stats = nullptr);

    /// Same sum for one explicit weight draw; bypasses every cache.
    LaurentSeries gw_invariant_with_weights(const InvariantDescriptor& desc,
                                            const WeightVector& weights,
                                            EngineStats* stats = nullptr) const;

    /// True iff the invariant is identical across `trials` independent
    /// generic weight draws (trials >= 2).
    bool weight_independence_check(const InvariantDescriptor& desc, int trials);

    const HodgeTable& hodge() const { return *hodge_; }
    const EngineConfig& config() const { return cfg_; }
    void set_cache(ResultCache* cache) { cache_ = cache; }

private:
    LaurentSeries sum_graphs(const std::vector<LocGraph>& graphs, const InvariantDescriptor& desc,
                             const WeightVector& weights) const;

    EngineConfig cfg_;
    std::shared_ptr<const HodgeTable> hodge_;
    ResultCache* cache_ = nullptr;

    mutable std::shared_mutex memo_mutex_;
    mutable std::unordered_map<std::string, LaurentSeries> memo_;
};

}  // namespace gwql
