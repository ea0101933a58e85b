#include "gwql/weights.hpp"

#include <random>
#include <set>

namespace gwql {

WeightVector::WeightVector(std::vector<Rational> weights) : w_(std::move(weights)) {
    if (w_.size() < 2) throw InvalidInput("weight vector needs at least two entries");
    for (size_t i = 0; i < w_.size(); ++i) {
        if (w_[i].is_zero()) throw InvalidInput("torus weights must be nonzero");
        for (size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] == w_[j]) throw InvalidInput("torus weights must be pairwise distinct");
    }
}

WeightVector WeightVector::random(int n_plus_one, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-199, 199);
    std::set<long> seen;
    std::vector<Rational> w;
    while (static_cast<int>(w.size()) < n_plus_one) {
        long v = dist(rng);
        if (v == 0 || !seen.insert(v).second) continue;
        w.emplace_back(v);
    }
    return WeightVector(std::move(w));
}

Rational WeightVector::difference(int i, int j) const {
    Rational d = w_[static_cast<size_t>(i)] - w_[static_cast<size_t>(j)];
    if (d.is_zero()) throw NonGenericWeights("coincident torus weights");
    return d;
}

Rational WeightVector::tangent_euler(int i) const {
    Rational e(1);
    for (int j = 0; j < size(); ++j)
        if (j != i) e *= difference(i, j);
    return e;
}

}  // namespace gwql
