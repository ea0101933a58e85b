#include "gwql/relations.hpp"

#include <chrono>

#include "gwql/errors.hpp"

namespace gwql {

using nlohmann::ordered_json;

RelationId parse_relation_id(const std::string& s) {
    if (s == "sec3.1-rel1") return RelationId::Sec31Rel1;
    if (s == "sec3.1-rel2") return RelationId::Sec31Rel2;
    if (s == "sec3.2-fano") return RelationId::Sec32Fano;
    throw InvalidInput("unknown relation id: " + s);
}

std::string to_string(RelationId id) {
    switch (id) {
        case RelationId::Sec31Rel1: return "sec3.1-rel1";
        case RelationId::Sec31Rel2: return "sec3.1-rel2";
        case RelationId::Sec32Fano: return "sec3.2-fano";
    }
    return "?";
}

bool check_preconditions(const RelationCase& c) {
    const int N = c.X.N;
    if (c.beta_degree < 1) return false;
    if (c.id == RelationId::Sec32Fano) {
        // Fano threefold with -K base-point free; P^3 carries D = O(4).
        return N == 3 && c.D_degree == 4;
    }
    // (gamma, D) > 1 for every nonzero curve class: on P^N this is Ddeg > 1.
    if (c.D_degree <= 1) return false;
    // (beta, c1(TX) - D) + 1 > 0.
    return static_cast<long>(c.beta_degree) * (N + 1 - c.D_degree) + 1 > 0;
}

namespace {

long kernel_order_for(const RelationCase& c, int genus) {
    if (c.kernel_order_override >= 0) return c.kernel_order_override;
    InvariantDescriptor probe;
    probe.space = c.X;
    probe.genus = genus;
    probe.degree = c.beta_degree;
    probe.insertions.resize(1);
    return probe.vdim_untwisted() + 2;
}

TwistEntry relation_twist(const RelationCase& c) {
    // O(-D) (or O(K_X) in the anticanonical case) with the weight-1
    // fiberwise action, inserted as the inverse Euler class.
    TwistEntry t;
    t.bundle_degree = -c.D_degree;
    t.lambda_weight = +1;
    t.mode = EulerMode::Inverse;
    return t;
}

InsertionDescriptor kernel_insertion(const RelationCase& c, int genus) {
    InsertionDescriptor ins;
    ins.kernel = {Rational(c.D_degree), kernel_order_for(c, genus)};
    return ins;
}

}  // namespace

InvariantDescriptor relation_lhs_descriptor(const RelationCase& c) {
    InvariantDescriptor d;
    d.space = c.X;
    d.twists = {relation_twist(c)};
    d.genus = 1;
    d.degree = c.beta_degree;
    InsertionDescriptor ins = kernel_insertion(c, 1);
    switch (c.id) {
        case RelationId::Sec31Rel1:
            // <1/(λ-D-ψ)>: trivial numerator
            ins.h_poly = {Rational(1)};
            break;
        case RelationId::Sec31Rel2:
        case RelationId::Sec32Fano:
            // <D/(λ-D-ψ)>; in the anticanonical case D = -K_X = (N+1)H.
            ins.h_poly = {Rational(0), Rational(c.D_degree)};
            break;
    }
    d.insertions = {ins};
    d.normalize();
    return d;
}

std::vector<std::pair<LaurentSeries, InvariantDescriptor>> relation_rhs_terms(
    const RelationCase& c) {
    const int N = c.X.N;
    auto base = [&]() {
        InvariantDescriptor d;
        d.space = c.X;
        d.twists = {relation_twist(c)};
        d.genus = 0;
        d.degree = c.beta_degree;
        d.insertions = {kernel_insertion(c, 0)};
        return d;
    };
    std::vector<std::pair<LaurentSeries, InvariantDescriptor>> terms;
    const Rational m24(-1, 24);
    switch (c.id) {
        case RelationId::Sec31Rel1: {
            // -1/(24λ²) <D·c_{N-1}(TX)/(λ-D-ψ)> - 1/(24λ) <c_{N-1}(TX)/(λ-D-ψ)>
            InvariantDescriptor t1 = base();
            t1.insertions[0].h_poly = {Rational(0), Rational(c.D_degree)};
            t1.insertions[0].chern_factors = {N - 1};
            terms.emplace_back(LaurentSeries::monomial(2, m24), t1);
            InvariantDescriptor t2 = base();
            t2.insertions[0].h_poly = {Rational(1)};
            t2.insertions[0].chern_factors = {N - 1};
            terms.emplace_back(LaurentSeries::monomial(1, m24), t2);
            break;
        }
        case RelationId::Sec31Rel2: {
            // -1/(24λ) <D·c_{N-1}(TX)/(λ-D-ψ)> - 1/24 <D·c_{N-2}(TX)/(λ-D-ψ)>
            InvariantDescriptor t1 = base();
            t1.insertions[0].h_poly = {Rational(0), Rational(c.D_degree)};
            t1.insertions[0].chern_factors = {N - 1};
            terms.emplace_back(LaurentSeries::monomial(1, m24), t1);
            InvariantDescriptor t2 = base();
            t2.insertions[0].h_poly = {Rational(0), Rational(c.D_degree)};
            t2.insertions[0].chern_factors = {N - 2};
            terms.emplace_back(LaurentSeries::monomial(0, m24), t2);
            break;
        }
        case RelationId::Sec32Fano: {
            // -1/(24λ) <-K_X·c_2(TX)/(λ+K_X-ψ)> - 1/24 <K_X²/(λ+K_X-ψ)>
            InvariantDescriptor t1 = base();
            t1.insertions[0].h_poly = {Rational(0), Rational(c.D_degree)};  // -K_X = (N+1)H
            t1.insertions[0].chern_factors = {2};
            terms.emplace_back(LaurentSeries::monomial(1, m24), t1);
            InvariantDescriptor t2 = base();
            t2.insertions[0].h_poly = {Rational(0), Rational(0),
                                       Rational(c.D_degree) * Rational(c.D_degree)};  // K_X²
            terms.emplace_back(LaurentSeries::monomial(0, m24), t2);
            break;
        }
    }
    for (auto& [pre, d] : terms) d.normalize();
    return terms;
}

RelationOutcome check_relation(const RelationCase& c, Engine& engine) {
    if (!check_preconditions(c)) throw InvalidInput("relation preconditions fail for this case");
    auto t0 = std::chrono::steady_clock::now();
    RelationOutcome out;

    EngineStats st;
    out.lhs = engine.gw_invariant(relation_lhs_descriptor(c), &st);
    out.graph_count += st.graph_count;
    out.rhs = LaurentSeries::zero();
    for (const auto& [pre, d] : relation_rhs_terms(c)) {
        LaurentSeries v = engine.gw_invariant(d, &st);
        out.graph_count += st.graph_count;
        out.rhs += pre * v;
    }
    if (out.lhs.is_zero() && out.rhs.is_zero())
        throw InvalidInput("vacuous relation comparison: both sides identically zero");

    // Support ranges must agree before coefficients are compared.
    if (out.lhs.is_zero() != out.rhs.is_zero()) {
        out.range_mismatch = true;
        out.equal = false;
    } else {
        out.range_mismatch = out.lhs.lowest_exponent() != out.rhs.lowest_exponent() ||
                             out.lhs.highest_exponent() != out.rhs.highest_exponent();
        long order = std::min(out.lhs.truncation_order(), out.rhs.truncation_order());
        out.equal = !out.range_mismatch && LaurentSeries::agree_through(out.lhs, out.rhs, order);
    }
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

ordered_json relation_case_to_json(const RelationCase& c) {
    ordered_json j;
    j["id"] = to_string(c.id);
    j["X"] = "P" + std::to_string(c.X.N);
    j["D_degree"] = c.D_degree;
    j["beta"] = c.beta_degree;
    return j;
}

RelationCase relation_case_from_json(const nlohmann::json& j) {
    RelationCase c;
    c.id = parse_relation_id(j.at("id").get<std::string>());
    c.X = parse_space(j.at("X").get<std::string>());
    c.D_degree = j.at("D_degree").get<int>();
    c.beta_degree = j.at("beta").get<int>();
    return c;
}

std::pair<ordered_json, bool> relation_report(const std::vector<RelationCase>& cases,
                                              Engine& engine) {
    ordered_json report = ordered_json::array();
    bool all = true;
    for (const auto& c : cases) {
        ordered_json rec;
        rec["case"] = relation_case_to_json(c);
        bool pre = check_preconditions(c);
        rec["preconditions"] = pre;
        if (!pre) {
            rec["equal"] = false;
            all = false;
            report.push_back(rec);
            continue;
        }
        RelationOutcome out = check_relation(c, engine);
        rec["lhs"] = engine_value_to_json(out.lhs);
        rec["rhs"] = engine_value_to_json(out.rhs);
        rec["equal"] = out.equal;
        rec["range_mismatch"] = out.range_mismatch;
        rec["graph_count"] = out.graph_count;
        rec["wall_seconds"] = out.wall_seconds;
        all = all && out.equal;
        report.push_back(rec);
    }
    return {report, all};
}

}  // namespace gwql
