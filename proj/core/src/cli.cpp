#include "gwql/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwql/cache.hpp"
#include "gwql/descriptor.hpp"
#include "gwql/engine.hpp"
#include "gwql/hypergeom.hpp"
#include "gwql/lefschetz.hpp"
#include "gwql/loc_graph.hpp"
#include "gwql/relations.hpp"
#include "gwql/version.hpp"

namespace gwql {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

PairGeometry parse_pair(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw InvalidInput("pair must look like P<N>:<Ddeg>: " + s);
    PairGeometry pair;
    pair.ambient_dim = parse_space(s.substr(0, colon)).N;
    pair.D_degree = std::stoi(s.substr(colon + 1));
    if (pair.D_degree < 1) throw InvalidInput("hypersurface degree must be >= 1");
    return pair;
}

std::string resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("GWQL_CACHE_DIR"); env && *env) return env;
    return ".gwql-cache";
}

ordered_json loc_graph_to_json(const LocGraph& g) {
    ordered_json j;
    ordered_json vs = ordered_json::array();
    for (const auto& v : g.vertices()) {
        ordered_json jv;
        jv["fixed_point"] = v.fixed_point;
        jv["genus"] = v.genus;
        jv["markings"] = v.markings;
        vs.push_back(jv);
    }
    ordered_json es = ordered_json::array();
    for (const auto& e : g.edges()) es.push_back(ordered_json::array({e.v, e.w, e.degree}));
    j["vertices"] = vs;
    j["edges"] = es;
    j["aut"] = g.aut_order();
    j["edge_degree_product"] = g.edge_degree_product();
    j["automorphism_order"] = g.automorphism_order();
    return j;
}

ordered_json hypergraph_to_json(const Hypergraph& h) {
    ordered_json j;
    ordered_json vs = ordered_json::array();
    for (const auto& v : h.vertices) {
        ordered_json jv;
        jv["genus"] = v.genus;
        jv["locus"] = to_string(v.locus);
        vs.push_back(jv);
    }
    ordered_json es = ordered_json::array();
    for (const auto& e : h.edges) es.push_back(ordered_json::array({e.v, e.w}));
    j["vertices"] = vs;
    j["edges"] = es;
    return j;
}

struct CliContext {
    std::ostream& out;
    std::ostream& err;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"gwql: exact torus-localization toolkit for genus <= 1 Gromov-Witten "
                 "invariants of projective spaces"};
    app.require_subcommand(1);

    std::string cache_dir_flag;
    std::uint64_t weight_seed = EngineConfig{}.weight_seed;
    bool no_cache = false;
    app.add_option("--cache-dir", cache_dir_flag, "cache directory (default $GWQL_CACHE_DIR or .gwql-cache)");
    app.add_option("--weight-seed", weight_seed, "seed for the generic torus weight draw");
    app.add_flag("--no-cache", no_cache, "skip the on-disk invariant cache");

    // ---- invariant compute ----
    auto* invariant = app.add_subcommand("invariant", "evaluate GW invariants");
    auto* compute = invariant->add_subcommand("compute", "compute one invariant");
    std::string space_str = "P4";
    std::vector<std::string> twist_strs, insertion_strs;
    int genus = 0, degree = 1;
    bool inv_json = false;
    compute->add_option("--space", space_str, "target P<N>")->required();
    compute->add_option("--twist", twist_strs, "twist entry <k>:<±m>[:inv]");
    compute->add_option("--genus", genus, "genus (0 or 1)")->required();
    compute->add_option("--degree", degree, "curve degree")->required();
    compute->add_option("--insertion", insertion_strs,
                        "insertion \"<poly>[;psi=<p>][;kernel=<c>,<order>][;chern=<k,...>]\"");
    compute->add_flag("--json", inv_json, "JSON output");

    // ---- relation check / suite ----
    auto* relation = app.add_subcommand("relation", "verify the built-in relations");
    auto* rcheck = relation->add_subcommand("check", "check one relation case");
    std::string rel_id = "sec3.1-rel2", rel_space = "P2";
    int rel_ddeg = 2, rel_beta = 1;
    bool rel_json = false;
    rcheck->add_option("--id", rel_id, "relation id (sec3.1-rel1, sec3.1-rel2, sec3.2-fano)")->required();
    rcheck->add_option("--X", rel_space, "base space P<N>")->required();
    rcheck->add_option("--Ddeg", rel_ddeg, "divisor degree")->required();
    rcheck->add_option("--beta", rel_beta, "curve degree")->required();
    rcheck->add_flag("--json", rel_json, "JSON output");
    auto* rsuite = relation->add_subcommand("suite", "run a JSON file of relation cases");
    std::string suite_file;
    bool suite_json = false;
    rsuite->add_option("--file", suite_file, "cases JSON file")->required();
    rsuite->add_flag("--json", suite_json, "JSON output");

    // ---- bounds check ----
    auto* bounds = app.add_subcommand("bounds", "virtual-dimension and vanishing bounds");
    auto* bcheck = bounds->add_subcommand("check", "evaluate the vanishing bound");
    std::string pair_str = "P4:5";
    int bgenus = 0, bdegree = 0, bprimitive = 0;
    bool bounds_json = false;
    bcheck->add_option("--pair", pair_str, "pair P<N>:<Ddeg>")->required();
    bcheck->add_option("--genus", bgenus, "genus")->required();
    bcheck->add_option("--degree", bdegree, "curve degree")->required();
    bcheck->add_option("--primitive", bprimitive, "primitive insertion count m");
    bcheck->add_flag("--json", bounds_json, "JSON output");

    // ---- masterspace data ----
    auto* master = app.add_subcommand("masterspace", "fixed-locus catalog");
    auto* mdata = master->add_subcommand("data", "normal bundle data of the three fixed loci");
    std::string mpair_str = "P4:5";
    int L_degree = 0;
    bool master_json = false;
    mdata->add_option("--L", L_degree, "auxiliary line bundle degree")->required();
    mdata->add_option("--pair", mpair_str, "pair P<N>:<Ddeg>");
    mdata->add_flag("--json", master_json, "JSON output");

    // ---- hypergraphs enumerate ----
    auto* hyper = app.add_subcommand("hypergraphs", "decorated stable hypergraphs");
    auto* henum = hyper->add_subcommand("enumerate", "enumerate for a fixed genus >= 2");
    int hgenus = 2;
    bool count_only = false, hyper_json = false;
    henum->add_option("--genus", hgenus, "genus (>= 2)")->required();
    henum->add_flag("--count-only", count_only, "print the count only");
    henum->add_flag("--json", hyper_json, "JSON output");

    // ---- graphs enumerate ----
    auto* graphs = app.add_subcommand("graphs", "localization graphs");
    auto* genum = graphs->add_subcommand("enumerate", "enumerate localization graphs");
    std::string gspace = "P1";
    int gdeg = 1, ggenus = 0, gmarks = 0;
    bool graphs_json = false, graphs_count_only = false;
    genum->add_option("--space", gspace, "target P<N>")->required();
    genum->add_option("--degree", gdeg, "curve degree")->required();
    genum->add_option("--genus", ggenus, "genus (0 or 1)")->required();
    genum->add_option("--markings", gmarks, "marking count");
    genum->add_flag("--count-only", graphs_count_only, "print the count only");
    genum->add_flag("--json", graphs_json, "JSON output");

    // ---- hodge-table ----
    auto* hodgecmd = app.add_subcommand("hodge-table", "dump the psi/lambda_1 integral table");
    int hg = 1, max_n = 4;
    bool hodge_json = false;
    hodgecmd->add_option("--genus", hg, "genus (0 or 1)")->required();
    hodgecmd->add_option("--max-n", max_n, "largest marking count");
    hodgecmd->add_flag("--json", hodge_json, "JSON output");

    // ---- cache ----
    auto* cachecmd = app.add_subcommand("cache", "inspect the invariant cache");
    auto* cstats = cachecmd->add_subcommand("stats", "entry count and directory");
    bool cache_json = false;
    cstats->add_flag("--json", cache_json, "JSON output");
    auto* cclear = cachecmd->add_subcommand("clear", "remove every entry");

    std::vector<const char*> argv;
    argv.push_back("gwql");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        EngineConfig cfg;
        cfg.weight_seed = weight_seed;
        std::unique_ptr<ResultCache> cache;
        if (!no_cache) cache = std::make_unique<ResultCache>(resolve_cache_dir(cache_dir_flag));
        Engine engine(cfg);
        engine.set_cache(cache.get());

        if (compute->parsed()) {
            InvariantDescriptor d;
            d.space = parse_space(space_str);
            for (const auto& t : twist_strs) d.twists.push_back(parse_twist(t));
            d.genus = genus;
            d.degree = degree;
            for (const auto& i : insertion_strs) d.insertions.push_back(parse_insertion(i));
            d.normalize();
            EngineStats stats;
            LaurentSeries value = engine.gw_invariant(d, &stats);
            if (inv_json) {
                ordered_json j;
                j["descriptor"] = json::parse(d.canonical_key());
                j["value"] = engine_value_to_json(value);
                j["graph_count"] = stats.graph_count;
                j["weight_retries"] = stats.weight_retries;
                j["wall_seconds"] = stats.wall_seconds;
                out << j.dump(2) << "\n";
            } else {
                out << "descriptor: " << d.canonical_key() << "\n";
                out << "value: " << engine_value_to_json(value).dump() << "\n";
                out << "graphs: " << stats.graph_count << "  wall: " << stats.wall_seconds << "s\n";
            }
            return 0;
        }

        if (rcheck->parsed()) {
            RelationCase c;
            c.id = parse_relation_id(rel_id);
            c.X = parse_space(rel_space);
            c.D_degree = rel_ddeg;
            c.beta_degree = rel_beta;
            auto [report, all] = relation_report({c}, engine);
            if (rel_json)
                out << report.dump(2) << "\n";
            else
                out << (all ? "equal" : "NOT equal") << "\n";
            return all ? 0 : 1;
        }

        if (rsuite->parsed()) {
            std::ifstream in(suite_file);
            if (!in) throw InvalidInput("cannot open " + suite_file);
            json jf;
            in >> jf;
            std::vector<RelationCase> cases;
            for (const auto& j : jf) cases.push_back(relation_case_from_json(j));
            auto [report, all] = relation_report(cases, engine);
            if (suite_json) {
                out << report.dump(2) << "\n";
            } else {
                for (const auto& rec : report)
                    out << rec["case"]["id"].get<std::string>() << " "
                        << rec["case"]["X"].get<std::string>() << " beta="
                        << rec["case"]["beta"].get<int>() << ": "
                        << (rec["equal"].get<bool>() ? "equal" : "NOT equal") << "\n";
            }
            return all ? 0 : 1;
        }

        if (bcheck->parsed()) {
            PairGeometry pair = parse_pair(pair_str);
            bool vb = vanishing_bound(pair, bgenus, bdegree, bprimitive);
            if (bounds_json) {
                ordered_json j;
                j["pair"] = pair_str;
                j["genus"] = bgenus;
                j["degree"] = bdegree;
                j["primitive"] = bprimitive;
                j["vanishing_bound"] = vb;
                j["degree_condition_modified"] = degree_condition_modified(pair, bdegree, bgenus);
                j["vdim_difference"] = vdim(pair, bgenus, 0, bdegree, VdimTarget::Masterspace) -
                                       vdim(pair, bgenus, 0, bdegree, VdimTarget::Hypersurface);
                out << j.dump(2) << "\n";
            } else {
                out << (vb ? "true" : "false") << "\n";
            }
            return 0;
        }

        if (mdata->parsed()) {
            MasterspaceSpec spec;
            spec.pair = parse_pair(mpair_str);
            spec.L_degree = L_degree;
            auto data = masterspace_fixed_data(spec);
            ordered_json j = ordered_json::array();
            for (const auto& locus : data) {
                ordered_json rec;
                rec["locus"] = to_string(locus.locus);
                ordered_json nb = ordered_json::array();
                for (const auto& s : locus.normal_bundle)
                    nb.push_back({{"degree", s.degree}, {"lambda_sign", s.lambda_sign}});
                rec["normal_bundle"] = nb;
                j.push_back(rec);
            }
            if (master_json) {
                out << j.dump(2) << "\n";
            } else {
                for (const auto& rec : j) {
                    out << rec["locus"].get<std::string>() << ":";
                    for (const auto& s : rec["normal_bundle"])
                        out << " O(" << s["degree"].get<int>() << ")"
                            << (s["lambda_sign"].get<int>() > 0 ? "+" : "-");
                    out << "\n";
                }
            }
            return 0;
        }

        if (henum->parsed()) {
            auto hs = enumerate_hypergraphs(hgenus);
            if (count_only) {
                out << hs.size() << "\n";
            } else if (hyper_json) {
                ordered_json j = ordered_json::array();
                for (const auto& h : hs) j.push_back(hypergraph_to_json(h));
                out << j.dump(2) << "\n";
            } else {
                for (const auto& h : hs) out << h.canonical_key() << "\n";
            }
            return 0;
        }

        if (genum->parsed()) {
            auto gs = enumerate_loc_graphs(parse_space(gspace).N, gdeg, ggenus, gmarks);
            if (graphs_count_only) {
                out << gs.size() << "\n";
            } else if (graphs_json) {
                ordered_json j = ordered_json::array();
                for (const auto& g : gs) j.push_back(loc_graph_to_json(g));
                out << j.dump(2) << "\n";
            } else {
                for (const auto& g : gs) out << g.canonical_key() << "\n";
            }
            return 0;
        }

        if (hodgecmd->parsed()) {
            if (hg != 0 && hg != 1) throw InvalidInput("hodge-table covers genus 0 and 1");
            HodgeTable table;
            ordered_json rows = ordered_json::array();
            std::function<void(std::vector<long>&, long, long)> rec =
                [&](std::vector<long>& cur, long n, long left) {
                    if (static_cast<long>(cur.size()) == n) {
                        for (long b = 0; b <= (hg == 1 ? 1 : 0); ++b) {
                            long need = (hg == 0) ? n - 3 : n - b;
                            long sum = 0;
                            for (long a : cur) sum += a;
                            if (sum != need) continue;
                            Rational v = (hg == 0) ? table.psi_integral_g0(cur)
                                                   : table.hodge_integral_g1(cur, b);
                            ordered_json row;
                            row["psi"] = cur;
                            row["lambda1"] = b;
                            row["value"] = v.to_string();
                            rows.push_back(row);
                        }
                        return;
                    }
                    long prev = cur.empty() ? 0 : cur.back();
                    for (long a = prev; a <= left; ++a) {  // nondecreasing: one row per multiset
                        cur.push_back(a);
                        rec(cur, n, left - a);
                        cur.pop_back();
                    }
                };
            long n0 = (hg == 0) ? 3 : 1;
            for (long n = n0; n <= max_n; ++n) {
                std::vector<long> cur;
                long dim = (hg == 0) ? n - 3 : n;
                rec(cur, n, dim);
            }
            if (hodge_json)
                out << rows.dump(2) << "\n";
            else
                for (const auto& row : rows) {
                    out << "psi=[";
                    bool first = true;
                    for (const auto& a : row["psi"]) {
                        if (!first) out << ",";
                        first = false;
                        out << a.get<long>();
                    }
                    out << "] lambda1=" << row["lambda1"].get<long>() << " -> "
                        << row["value"].get<std::string>() << "\n";
                }
            return 0;
        }

        if (cstats->parsed()) {
            ResultCache c(resolve_cache_dir(cache_dir_flag));
            if (cache_json) {
                ordered_json j;
                j["directory"] = c.directory().string();
                j["entries"] = c.entry_count();
                j["engine_version"] = kEngineVersion;
                out << j.dump(2) << "\n";
            } else {
                out << c.directory().string() << ": " << c.entry_count() << " entries\n";
            }
            return 0;
        }
        if (cclear->parsed()) {
            ResultCache c(resolve_cache_dir(cache_dir_flag));
            c.clear();
            out << "cleared\n";
            return 0;
        }

        err << "no action (see --help)\n";
        return 2;
    } catch (const InvalidInput& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gwql
