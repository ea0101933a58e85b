#pragma once

#include <set>
#include <string>
#include <vector>

#include "gwql/errors.hpp"

namespace gwql {

/// Vertex of a localization graph: the P^N fixed point it sits over, the
/// genus of the contracted component (0 if none), and the marking labels
/// carried there.
struct LocVertex {
    int fixed_point = 0;
    int genus = 0;
    std::set<int> markings;

    friend bool operator==(const LocVertex&, const LocVertex&) = default;
};

/// Edge: a multiple cover of the invariant line joining two distinct fixed
/// points, of the given positive degree.
struct LocEdge {
    int v = 0;
    int w = 0;
    int degree = 1;

    friend bool operator==(const LocEdge&, const LocEdge&) = default;
};

/// How a vertex enters the localization formula. Unstable vertices are kept
/// in the graph and flagged; their contribution rules live in the engine.
enum class VertexClass {
    StableModuli,  // carries a Mbar_{g,val+markings} factor
    UnmarkedTail,  // genus 0, valence 1, no marking: free end of an edge
    MarkedTail,    // genus 0, valence 1, one marking at the end point
    Joint,         // genus 0, valence 2, no marking: node between two edges
};

/// Decorated localization graph indexing a torus-fixed locus of stable maps
/// to P^N, stored in canonical labeling. Construction validates every
/// invariant (connectivity, distinct adjacent fixed points, genus budget,
/// marking partition) and computes the automorphism data.
class LocGraph {
public:
    LocGraph(std::vector<LocVertex> vertices, std::vector<LocEdge> edges);

    const std::vector<LocVertex>& vertices() const { return vertices_; }
    const std::vector<LocEdge>& edges() const { return edges_; }

    int degree() const;
    int betti1() const { return static_cast<int>(edges_.size() - vertices_.size()) + 1; }
    int total_genus() const;
    int marking_count() const;

    /// Order of the decoration-preserving automorphism group (including
    /// permutations of parallel edges of equal degree).
    long aut_order() const { return aut_order_; }
    /// Product of the edge degrees d_e.
    long edge_degree_product() const { return edge_degree_product_; }
    /// The localization measure denominator aut_order() * edge_degree_product().
    long automorphism_order() const { return aut_order_ * edge_degree_product_; }

    std::vector<int> valences() const;
    std::vector<VertexClass> classify() const;

    const std::string& canonical_key() const { return key_; }

    friend bool operator==(const LocGraph& a, const LocGraph& b) { return a.key_ == b.key_; }
    friend bool operator<(const LocGraph& a, const LocGraph& b) { return a.key_ < b.key_; }

private:
    void validate() const;
    void canonicalize();

    std::vector<LocVertex> vertices_;
    std::vector<LocEdge> edges_;
    long aut_order_ = 1;
    long edge_degree_product_ = 1;
    std::string key_;
};

/// All isomorphism classes of localization graphs for Mbar_{g,n}(P^N, d),
/// markings distributed over vertices in every way, sorted by canonical key.
/// Throws InvalidInput for g >= 2 (unsupported genus) or bad N, d.
std::vector<LocGraph> enumerate_loc_graphs(int N, int d, int g, int n);

/// (decorated automorphism order, product of edge degrees); the two factors
/// of the localization measure, reported separately.
std::pair<long, long> graph_automorphisms(const LocGraph& graph);

}  // namespace gwql
