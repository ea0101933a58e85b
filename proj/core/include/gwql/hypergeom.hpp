#pragma once

#include <vector>

#include "gwql/rational.hpp"

namespace gwql {

/// Independent genus-0 oracle: the degree-d no-insertion twisted invariant
/// of P^N (twist bundles O(k_i) with non-equivariant Euler class) extracted
/// from the hypergeometric series
///
///   I = sum_d q^d  prod_i prod_{m=1}^{k_i d} (k_i H + m hbar)
///                  / prod_{m=1}^{d} (H + m hbar)^{N+1},
///
/// with the low-degree mirror-map correction applied in the Calabi-Yau-type
/// case (sum k_i = N+1). Shares nothing with the localization engine beyond
/// the scalar types; used to certify it.
///
/// Preconditions: all k_i >= 1, sum k_i <= N+1 (convexity), d >= 1.
/// Throws InvalidInput otherwise.
Rational hypergeom_genus0_oracle(int N, const std::vector<int>& twist_degrees, int d);

}  // namespace gwql
