#pragma once

#include <map>
#include <string>
#include <vector>

#include "gwql/rational.hpp"

namespace gwql {

/// The pair (X, D): X = P^N with a smooth degree-Ddeg hypersurface D.
/// Curve classes are identified with their H-degree d, so (beta_D, D) =
/// d * D_degree and c1 degrees are exact integers.
struct PairGeometry {
    int ambient_dim = 4;   // N
    int D_degree = 5;      // degree of the hypersurface
    int c1_X_degree() const { return ambient_dim + 1; }
};

/// The P^1-bundle variant of the masterspace, twisted by an auxiliary line
/// bundle L of the given degree. L_degree = 0 reproduces the original
/// deformation to the normal cone.
struct MasterspaceSpec {
    PairGeometry pair;
    int L_degree = 0;
};

enum class FixedLocus { D0, X0, Xinf };

/// One line-bundle summand of the normal bundle of a fixed locus: its
/// degree restricted to the locus and the sign of the fiberwise C* weight.
/// Sign convention: weight -1 on the tangent line at 0, so X0 carries -1,
/// Xinf +1, and D0 the pair {L: -1, O_D(D) ⊗ L^dual: +1}.
struct NormalSummand {
    int degree = 0;
    int lambda_sign = +1;
};

struct FixedLocusData {
    FixedLocus locus = FixedLocus::D0;
    std::vector<NormalSummand> normal_bundle;
};

/// Which moduli the virtual dimension refers to.
enum class VdimTarget { Ambient, Hypersurface, Masterspace };

/// vdim Mbar_{g,n}(Y, beta) for Y in {X, D, masterspace}; the masterspace
/// value is defined through the identity
///   vdim^masterspace - vdim^D = 2 - 2g + (beta_D, D).
long vdim(const PairGeometry& pair, int g, int n, int d, VdimTarget target);

/// True iff 2 - 2g + d*D_degree > m: the masterspace invariant with m
/// primitive insertions vanishes and the recursion step fires.
bool vanishing_bound(const PairGeometry& pair, int g, int d, int m);

/// True iff the integral of c1(O_D(D)) over beta exceeds 2(g-1); coincides
/// with vanishing_bound(m = 0) — the degree condition does not change under
/// the L-modification.
bool degree_condition_modified(const PairGeometry& pair, int d, int g);

/// True iff sum deg(alpha_i) < (1-g)(dim X - 2) - beta_degree*D_degree
/// + k + n (strict). beta_degree defaults to 0, which is the form the
/// K3 / anticanonical case takes.
bool fiber_class_bound(const PairGeometry& pair, int g, int k, int n,
                       const std::vector<long>& insertion_degrees, int beta_degree = 0);

/// Normal-bundle data of the three fixed loci:
///   D0   -> {L, O_D(D) ⊗ L^dual}, X0 -> {O(-D) ⊗ L}, Xinf -> {L^dual}.
std::vector<FixedLocusData> masterspace_fixed_data(const MasterspaceSpec& spec);

/// Initial data P_g(q): polynomial in q whose degree is bounded by
/// floor((2g-2)/D_degree) on a CY3 pair.
struct InitialDataPolynomial {
    int genus = 0;
    std::map<int, Rational> coefficients;  // degree -> coefficient
};

/// True iff every nonzero coefficient sits in degree <= floor((2g-2)/Ddeg).
/// Throws InvalidInput unless the pair is CY3 (vdim^D = 0, i.e. the quintic
/// shape N = 4, Ddeg = 5).
bool initial_data_check(const InitialDataPolynomial& poly, const PairGeometry& pair);

/// Stable decorated hypergraph of genus g >= 2: vertex decorations
/// (g_i, f_i), loops allowed, genus-0 vertices trivalent and genus-1
/// vertices at least 1-valent (loops count twice), and — when any edge is
/// present — every decoration in {D0, X0}.
struct Hypergraph {
    struct Vertex {
        int genus = 0;
        FixedLocus locus = FixedLocus::D0;
    };
    struct Edge {
        int v = 0;
        int w = 0;  // v == w is a loop
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    int betti1() const { return static_cast<int>(edges.size() - vertices.size()) + 1; }
    int total_genus() const;
    std::vector<int> valences() const;  // loops count twice
    std::string canonical_key() const;
};

/// Complete duplicate-free list for fixed genus g >= 2, brute-forced within
/// the stability bounds (<= 2g-2 vertices, <= 3g-3 edges), sorted by
/// canonical key. Throws InvalidInput for g <= 1.
std::vector<Hypergraph> enumerate_hypergraphs(int g);

/// One step of the quantum-Lefschetz recursion as a plan record: which
/// masterspace invariant vanishes, the leading term it isolates, and the
/// lower-order keys the equation mixes. The recursion itself is not
/// executed numerically.
struct RecursionPlan {
    bool vanishes = false;
    int leading_sign = +1;        // (-1)^{1-g}
    long lambda_exponent = 0;     // -2 + 2g - d*D_degree
    std::string isolated;         // the hypersurface invariant solved for
    std::vector<std::string> lower_terms;
};

/// Throws InvalidInput when vanishing_bound is false (initial-data regime).
RecursionPlan recursion_plan(const PairGeometry& pair, int g, int d);

std::string to_string(FixedLocus locus);

}  // namespace gwql
