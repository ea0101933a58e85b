#pragma once

#include <cstdint>
#include <vector>

#include "gwql/rational.hpp"

namespace gwql {

/// Torus weights on the homogeneous coordinates of P^N: N+1 pairwise
/// distinct nonzero rationals. Localization specializes the big torus to
/// generic rational weights; only the fiberwise C* parameter λ stays formal.
/// Genericity beyond the constructor checks (no vanishing integer
/// combination in any edge factor) is enforced lazily: a vanishing
/// denominator raises NonGenericWeights and the engine redraws.
class WeightVector {
public:
    explicit WeightVector(std::vector<Rational> weights);

    /// Deterministic draw: distinct nonzero integers in [-199, 199].
    static WeightVector random(int n_plus_one, std::uint64_t seed);

    int size() const { return static_cast<int>(w_.size()); }
    const Rational& operator[](int i) const { return w_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& weights() const { return w_; }

    /// alpha_i - alpha_j; throws NonGenericWeights if it vanishes.
    Rational difference(int i, int j) const;

    /// Euler class of the tangent space at fixed point i:
    /// prod_{j != i} (alpha_i - alpha_j).
    Rational tangent_euler(int i) const;

private:
    std::vector<Rational> w_;
};

}  // namespace gwql
