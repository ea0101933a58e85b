#include "gwql/loc_graph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace gwql {

namespace {

// Union-find connectivity over the edge list.
bool connected(size_t n_vertices, const std::vector<LocEdge>& edges) {
    std::vector<size_t> parent(n_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges) parent[find(static_cast<size_t>(e.v))] = find(static_cast<size_t>(e.w));
    size_t root = find(0);
    for (size_t i = 1; i < n_vertices; ++i)
        if (find(i) != root) return false;
    return true;
}

std::string encode(const std::vector<LocVertex>& vs, const std::vector<LocEdge>& es,
                   const std::vector<int>& perm) {
    // perm[i] = new index of old vertex i.
    std::vector<const LocVertex*> newv(vs.size());
    for (size_t i = 0; i < vs.size(); ++i) newv[static_cast<size_t>(perm[i])] = &vs[i];
    std::vector<std::array<int, 3>> newe;
    newe.reserve(es.size());
    for (const auto& e : es) {
        int a = perm[static_cast<size_t>(e.v)], b = perm[static_cast<size_t>(e.w)];
        if (a > b) std::swap(a, b);
        newe.push_back({a, b, e.degree});
    }
    std::sort(newe.begin(), newe.end());
    std::ostringstream os;
    for (const auto* v : newv) {
        os << "v" << v->fixed_point << "g" << v->genus << "m";
        for (int m : v->markings) os << m << ",";
        os << ";";
    }
    for (const auto& e : newe) os << "e" << e[0] << "-" << e[1] << "d" << e[2] << ";";
    return os.str();
}

}  // namespace

LocGraph::LocGraph(std::vector<LocVertex> vertices, std::vector<LocEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (auto& e : edges_)
        if (e.v > e.w) std::swap(e.v, e.w);
    validate();
    canonicalize();
}

void LocGraph::validate() const {
    if (vertices_.empty()) throw InvalidInput("graph without vertices");
    int nv = static_cast<int>(vertices_.size());
    for (const auto& e : edges_) {
        if (e.v < 0 || e.w < 0 || e.v >= nv || e.w >= nv)
            throw InvalidInput("edge endpoint out of range");
        if (e.v == e.w) throw InvalidInput("localization graphs have no loops");
        if (e.degree < 1) throw InvalidInput("edge degree must be positive");
        if (vertices_[static_cast<size_t>(e.v)].fixed_point ==
            vertices_[static_cast<size_t>(e.w)].fixed_point)
            throw InvalidInput("adjacent vertices must carry distinct fixed points");
    }
    if (!connected(vertices_.size(), edges_)) throw InvalidInput("graph is not connected");
    int b1 = betti1();
    int gsum = 0;
    for (const auto& v : vertices_) {
        if (v.genus < 0 || v.genus > 1) throw InvalidInput("vertex genus must be 0 or 1");
        if (v.fixed_point < 0) throw InvalidInput("negative fixed point label");
        gsum += v.genus;
    }
    if (gsum + b1 > 1) throw InvalidInput("total genus exceeds 1");
    if (gsum > 0 && b1 > 0) throw InvalidInput("genus-1 vertex and cycle cannot coexist at g<=1");
    std::set<int> seen;
    for (const auto& v : vertices_)
        for (int m : v.markings)
            if (!seen.insert(m).second) throw InvalidInput("duplicate marking label");
}

void LocGraph::canonicalize() {
    int nv = static_cast<int>(vertices_.size());
    std::vector<int> perm(static_cast<size_t>(nv));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best = perm;
    std::string best_key = encode(vertices_, edges_, perm);
    do {
        std::string k = encode(vertices_, edges_, perm);
        if (k < best_key) {
            best_key = k;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Relabel into canonical order.
    std::vector<LocVertex> vs(vertices_.size());
    for (size_t i = 0; i < vertices_.size(); ++i) vs[static_cast<size_t>(best[i])] = vertices_[i];
    for (auto& e : edges_) {
        e.v = best[static_cast<size_t>(e.v)];
        e.w = best[static_cast<size_t>(e.w)];
        if (e.v > e.w) std::swap(e.v, e.w);
    }
    std::sort(edges_.begin(), edges_.end(), [](const LocEdge& a, const LocEdge& b) {
        return std::tie(a.v, a.w, a.degree) < std::tie(b.v, b.w, b.degree);
    });
    vertices_ = std::move(vs);
    key_ = best_key;

    // Automorphisms: vertex permutations preserving the encoding, times
    // permutations of parallel edges of equal degree.
    std::iota(perm.begin(), perm.end(), 0);
    long vperms = 0;
    do {
        if (encode(vertices_, edges_, perm) == key_) ++vperms;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::map<std::array<int, 3>, long> parallel;
    for (const auto& e : edges_) ++parallel[{e.v, e.w, e.degree}];
    long pfact = 1;
    for (const auto& [k, c] : parallel)
        for (long i = 2; i <= c; ++i) pfact *= i;
    aut_order_ = vperms * pfact;
    edge_degree_product_ = 1;
    for (const auto& e : edges_) edge_degree_product_ *= e.degree;
}

int LocGraph::degree() const {
    int d = 0;
    for (const auto& e : edges_) d += e.degree;
    return d;
}

int LocGraph::total_genus() const {
    int g = betti1();
    for (const auto& v : vertices_) g += v.genus;
    return g;
}

int LocGraph::marking_count() const {
    int n = 0;
    for (const auto& v : vertices_) n += static_cast<int>(v.markings.size());
    return n;
}

std::vector<int> LocGraph::valences() const {
    std::vector<int> val(vertices_.size(), 0);
    for (const auto& e : edges_) {
        ++val[static_cast<size_t>(e.v)];
        ++val[static_cast<size_t>(e.w)];
    }
    return val;
}

std::vector<VertexClass> LocGraph::classify() const {
    auto val = valences();
    std::vector<VertexClass> out(vertices_.size());
    for (size_t i = 0; i < vertices_.size(); ++i) {
        const auto& v = vertices_[i];
        int special = val[i] + static_cast<int>(v.markings.size());
        if (v.genus == 1 || special >= 3) {
            out[i] = VertexClass::StableModuli;
        } else if (val[i] == 1 && v.markings.empty()) {
            out[i] = VertexClass::UnmarkedTail;
        } else if (val[i] == 1 && v.markings.size() == 1) {
            out[i] = VertexClass::MarkedTail;
        } else if (val[i] == 2 && v.markings.empty()) {
            out[i] = VertexClass::Joint;
        } else {
            throw Error("unclassifiable vertex");  // unreachable for valid graphs
        }
    }
    return out;
}

std::pair<long, long> graph_automorphisms(const LocGraph& graph) {
    return {graph.aut_order(), graph.edge_degree_product()};
}

namespace {

// Recursive generation helpers for enumerate_loc_graphs.

void edge_multisets(int n_pairs, int n_edges, int first, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (n_edges == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = first; p < n_pairs; ++p) {
        cur.push_back(p);
        edge_multisets(n_pairs, n_edges - 1, p, cur, out);
        cur.pop_back();
    }
}

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        if (total >= 1) {
            cur.push_back(total);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int x = 1; x <= total - (parts - 1); ++x) {
        cur.push_back(x);
        compositions(total - x, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<LocGraph> enumerate_loc_graphs(int N, int d, int g, int n) {
    if (N < 1) throw InvalidInput("need N >= 1");
    if (d < 1) throw InvalidInput("need degree >= 1");
    if (g < 0 || g > 1) throw InvalidInput("unsupported genus (engine covers g <= 1)");
    if (n < 0) throw InvalidInput("negative marking count");

    std::map<std::string, LocGraph> found;

    for (int V = 2; V <= d + 1; ++V) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < V; ++u)
            for (int w = u + 1; w < V; ++w) pairs.emplace_back(u, w);

        for (int b1 = 0; b1 <= (g == 1 ? 1 : 0); ++b1) {
            int E = V - 1 + b1;
            if (E > d || E < 1) continue;
            std::vector<std::vector<int>> structures;
            std::vector<int> cur;
            edge_multisets(static_cast<int>(pairs.size()), E, 0, cur, structures);

            std::vector<std::vector<int>> degs;
            std::vector<int> dcur;
            compositions(d, E, dcur, degs);

            for (const auto& st : structures) {
                std::vector<LocEdge> base;
                base.reserve(st.size());
                for (int p : st) base.push_back({pairs[static_cast<size_t>(p)].first,
                                                 pairs[static_cast<size_t>(p)].second, 1});
                if (!connected(static_cast<size_t>(V), base)) continue;

                // Fixed-point labelings with distinct labels across each edge.
                std::vector<int> fp(static_cast<size_t>(V), 0);
                std::vector<std::vector<int>> labelings;
                long total = 1;
                for (int i = 0; i < V; ++i) total *= (N + 1);
                for (long code = 0; code < total; ++code) {
                    long c = code;
                    for (int i = 0; i < V; ++i) {
                        fp[static_cast<size_t>(i)] = static_cast<int>(c % (N + 1));
                        c /= (N + 1);
                    }
                    bool ok = true;
                    for (const auto& e : base)
                        if (fp[static_cast<size_t>(e.v)] == fp[static_cast<size_t>(e.w)]) {
                            ok = false;
                            break;
                        }
                    if (ok) labelings.push_back(fp);
                }

                // Genus decorations: one genus-1 vertex on trees at g=1,
                // otherwise all vertices genus 0.
                std::vector<std::vector<int>> genera;
                if (g == 1 && b1 == 0) {
                    for (int i = 0; i < V; ++i) {
                        std::vector<int> gv(static_cast<size_t>(V), 0);
                        gv[static_cast<size_t>(i)] = 1;
                        genera.push_back(gv);
                    }
                } else {
                    genera.emplace_back(static_cast<size_t>(V), 0);
                }

                // Marking distributions.
                std::vector<std::vector<int>> markdist;
                long mtotal = 1;
                for (int i = 0; i < n; ++i) mtotal *= V;
                for (long code = 0; code < mtotal; ++code) {
                    long c = code;
                    std::vector<int> md(static_cast<size_t>(n));
                    for (int i = 0; i < n; ++i) {
                        md[static_cast<size_t>(i)] = static_cast<int>(c % V);
                        c /= V;
                    }
                    markdist.push_back(std::move(md));
                }

                for (const auto& dg : degs) {
                    for (const auto& lab : labelings) {
                        for (const auto& gv : genera) {
                            for (const auto& md : markdist) {
                                std::vector<LocVertex> vs(static_cast<size_t>(V));
                                for (int i = 0; i < V; ++i) {
                                    vs[static_cast<size_t>(i)].fixed_point = lab[static_cast<size_t>(i)];
                                    vs[static_cast<size_t>(i)].genus = gv[static_cast<size_t>(i)];
                                }
                                for (int m = 0; m < n; ++m)
                                    vs[static_cast<size_t>(md[static_cast<size_t>(m)])].markings.insert(m + 1);
                                std::vector<LocEdge> es = base;
                                for (size_t k = 0; k < es.size(); ++k) es[k].degree = dg[k];
                                LocGraph graph(std::move(vs), std::move(es));
                                found.emplace(graph.canonical_key(), std::move(graph));
                            }
                        }
                    }
                }
            }
        }
    }

    std::vector<LocGraph> out;
    out.reserve(found.size());
    for (auto& [k, gr] : found) out.push_back(std::move(gr));
    return out;
}

}  // namespace gwql
