#include "gwql/lefschetz.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "gwql/errors.hpp"

namespace gwql {

long vdim(const PairGeometry& pair, int g, int n, int d, VdimTarget target) {
    if (g < 0 || n < 0 || d < 0) throw InvalidInput("vdim needs g, n, d >= 0");
    const long N = pair.ambient_dim;
    switch (target) {
        case VdimTarget::Ambient:
            return (1 - g) * (N - 3) + static_cast<long>(d) * (N + 1) + n;
        case VdimTarget::Hypersurface:
            return (1 - g) * (N - 4) + static_cast<long>(d) * (N + 1 - pair.D_degree) + n;
        case VdimTarget::Masterspace:
            return vdim(pair, g, n, d, VdimTarget::Hypersurface) + 2 - 2 * g +
                   static_cast<long>(d) * pair.D_degree;
    }
    throw InvalidInput("bad vdim target");
}

bool vanishing_bound(const PairGeometry& pair, int g, int d, int m) {
    if (m < 0) throw InvalidInput("primitive insertion count must be >= 0");
    return 2 - 2 * static_cast<long>(g) + static_cast<long>(d) * pair.D_degree > m;
}

bool degree_condition_modified(const PairGeometry& pair, int d, int g) {
    if (d < 0) throw InvalidInput("degree must be >= 0");
    return static_cast<long>(d) * pair.D_degree > 2 * (static_cast<long>(g) - 1);
}

bool fiber_class_bound(const PairGeometry& pair, int g, int k, int n,
                       const std::vector<long>& insertion_degrees, int beta_degree) {
    if (k < 0) throw InvalidInput("fiber multiple must be >= 0");
    long total = 0;
    for (long deg : insertion_degrees) total += deg;
    long rhs = (1 - static_cast<long>(g)) * (pair.ambient_dim - 2) -
               static_cast<long>(beta_degree) * pair.D_degree + k + n;
    return total < rhs;
}

std::vector<FixedLocusData> masterspace_fixed_data(const MasterspaceSpec& spec) {
    const int Ddeg = spec.pair.D_degree;
    const int L = spec.L_degree;
    std::vector<FixedLocusData> out(3);
    out[0].locus = FixedLocus::D0;
    out[0].normal_bundle = {{L, -1}, {Ddeg - L, +1}};          // L, O_D(D) ⊗ L^dual
    out[1].locus = FixedLocus::X0;
    out[1].normal_bundle = {{-Ddeg + L, -1}};                  // O(-D) ⊗ L
    out[2].locus = FixedLocus::Xinf;
    out[2].normal_bundle = {{-L, +1}};                         // L^dual
    return out;
}

bool initial_data_check(const InitialDataPolynomial& poly, const PairGeometry& pair) {
    // CY3 means vdim^D = 0 for all (g, n, d): N = 4 and Ddeg = N + 1.
    if (pair.ambient_dim != 4 || pair.D_degree != pair.ambient_dim + 1)
        throw InvalidInput("initial-data bound only applies to a CY3 pair");
    long bound = (2 * static_cast<long>(poly.genus) - 2) / pair.D_degree;
    if (2 * poly.genus - 2 < 0) bound = -1;  // g = 0: floor is negative, nothing allowed
    if (poly.genus == 1) bound = 0;
    for (const auto& [deg, c] : poly.coefficients) {
        if (c.is_zero()) continue;
        if (deg < 0) throw InvalidInput("negative q-degree");
        if (deg > bound) return false;
    }
    return true;
}

int Hypergraph::total_genus() const {
    int g = betti1();
    for (const auto& v : vertices) g += v.genus;
    return g;
}

std::vector<int> Hypergraph::valences() const {
    std::vector<int> val(vertices.size(), 0);
    for (const auto& e : edges) {
        ++val[static_cast<size_t>(e.v)];
        ++val[static_cast<size_t>(e.w)];
    }
    return val;
}

std::string to_string(FixedLocus locus) {
    switch (locus) {
        case FixedLocus::D0: return "D0";
        case FixedLocus::X0: return "X0";
        case FixedLocus::Xinf: return "Xinf";
    }
    return "?";
}

namespace {

std::string encode_hypergraph(const Hypergraph& h, const std::vector<int>& perm) {
    std::ostringstream os;
    std::vector<const Hypergraph::Vertex*> vs(h.vertices.size());
    for (size_t i = 0; i < h.vertices.size(); ++i)
        vs[static_cast<size_t>(perm[i])] = &h.vertices[i];
    for (const auto* v : vs) os << "v" << v->genus << to_string(v->locus) << ";";
    std::vector<std::pair<int, int>> es;
    for (const auto& e : h.edges) {
        int a = perm[static_cast<size_t>(e.v)], b = perm[static_cast<size_t>(e.w)];
        if (a > b) std::swap(a, b);
        es.emplace_back(a, b);
    }
    std::sort(es.begin(), es.end());
    for (const auto& [a, b] : es) os << "e" << a << "-" << b << ";";
    return os.str();
}

bool hypergraph_connected(size_t nv, const std::vector<Hypergraph::Edge>& es) {
    if (nv == 0) return false;
    std::vector<size_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : es) parent[find(static_cast<size_t>(e.v))] = find(static_cast<size_t>(e.w));
    for (size_t i = 1; i < nv; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

bool hypergraph_valid(const Hypergraph& h, int g) {
    if (!hypergraph_connected(h.vertices.size(), h.edges)) return false;
    if (static_cast<int>(h.edges.size()) - static_cast<int>(h.vertices.size()) + 1 < 0) return false;
    if (h.total_genus() != g) return false;
    auto val = h.valences();
    for (size_t i = 0; i < h.vertices.size(); ++i) {
        int gi = h.vertices[i].genus;
        if (gi == 0 && val[i] < 3) return false;
        if (gi == 1 && val[i] < 1) return false;
    }
    if (!h.edges.empty()) {
        for (const auto& v : h.vertices)
            if (v.locus == FixedLocus::Xinf) return false;
    }
    return true;
}

}  // namespace

std::string Hypergraph::canonical_key() const {
    std::vector<int> perm(vertices.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best = encode_hypergraph(*this, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::string k = encode_hypergraph(*this, perm);
        if (k < best) best = k;
    }
    return best;
}

std::vector<Hypergraph> enumerate_hypergraphs(int g) {
    if (g <= 1) throw InvalidInput("hypergraph enumeration assumes g >= 2");
    const int maxV = 2 * g - 2;
    const int maxE = 3 * g - 3;
    std::map<std::string, Hypergraph> found;
    const FixedLocus all_loci[3] = {FixedLocus::D0, FixedLocus::X0, FixedLocus::Xinf};

    for (int V = 1; V <= maxV; ++V) {
        // Pair slots including loops.
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < V; ++u)
            for (int w = u; w < V; ++w) pairs.emplace_back(u, w);

        for (int E = 0; E <= maxE; ++E) {
            int b1 = E - V + 1;
            if (b1 < 0 || b1 > g) continue;
            // Multisets of E edge slots.
            std::vector<std::vector<int>> structures;
            std::vector<int> cur;
            std::function<void(int, int)> pick = [&](int left, int first) {
                if (left == 0) {
                    structures.push_back(cur);
                    return;
                }
                for (int p = first; p < static_cast<int>(pairs.size()); ++p) {
                    cur.push_back(p);
                    pick(left - 1, p);
                    cur.pop_back();
                }
            };
            pick(E, 0);

            for (const auto& st : structures) {
                Hypergraph base;
                base.vertices.resize(static_cast<size_t>(V));
                for (int p : st)
                    base.edges.push_back({pairs[static_cast<size_t>(p)].first,
                                          pairs[static_cast<size_t>(p)].second});
                if (!hypergraph_connected(static_cast<size_t>(V), base.edges)) continue;

                // Vertex genus assignments summing to g - b1.
                int gsum = g - b1;
                std::vector<std::vector<int>> gassign;
                std::vector<int> gcur;
                std::function<void(int, int)> gpick = [&](int idx, int left) {
                    if (idx == V) {
                        if (left == 0) gassign.push_back(gcur);
                        return;
                    }
                    for (int gi = 0; gi <= left; ++gi) {
                        gcur.push_back(gi);
                        gpick(idx + 1, left - gi);
                        gcur.pop_back();
                    }
                };
                gpick(0, gsum);

                long ltotal = 1;
                for (int i = 0; i < V; ++i) ltotal *= 3;
                for (const auto& ga : gassign) {
                    for (long code = 0; code < ltotal; ++code) {
                        Hypergraph h = base;
                        long c = code;
                        for (int i = 0; i < V; ++i) {
                            h.vertices[static_cast<size_t>(i)].genus = ga[static_cast<size_t>(i)];
                            h.vertices[static_cast<size_t>(i)].locus = all_loci[c % 3];
                            c /= 3;
                        }
                        if (!hypergraph_valid(h, g)) continue;
                        found.emplace(h.canonical_key(), std::move(h));
                    }
                }
            }
        }
    }
    std::vector<Hypergraph> out;
    out.reserve(found.size());
    for (auto& [k, h] : found) out.push_back(std::move(h));
    return out;
}

RecursionPlan recursion_plan(const PairGeometry& pair, int g, int d) {
    if (!vanishing_bound(pair, g, d, 0))
        throw InvalidInput("initial data regime, no recursion");
    RecursionPlan plan;
    plan.vanishes = true;
    plan.leading_sign = (1 - g) % 2 == 0 ? +1 : -1;
    plan.lambda_exponent = -2 + 2 * static_cast<long>(g) - static_cast<long>(d) * pair.D_degree;
    std::ostringstream iso;
    iso << "<>_{" << g << ",0," << d << "}^D";
    plan.isolated = iso.str();
    for (int gp = 0; gp < g; ++gp) {
        std::ostringstream os;
        os << "g=" << gp << ",d=" << d;
        plan.lower_terms.push_back(os.str());
    }
    for (int dp = 0; dp < d; ++dp) {
        std::ostringstream os;
        os << "g=" << g << ",d=" << dp;
        plan.lower_terms.push_back(os.str());
    }
    return plan;
}

}  // namespace gwql
