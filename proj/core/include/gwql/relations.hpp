#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gwql/descriptor.hpp"
#include "gwql/engine.hpp"

namespace gwql {

/// The three relation families the verifier knows. The first two differ in
/// their insertion data only; the third is the anticanonical (K3 divisor)
/// case on a Fano threefold, represented here by P^3.
enum class RelationId { Sec31Rel1, Sec31Rel2, Sec32Fano };

RelationId parse_relation_id(const std::string& s);
std::string to_string(RelationId id);

struct RelationCase {
    RelationId id = RelationId::Sec31Rel2;
    SpaceDescriptor X;
    int D_degree = 2;     // forced to N+1 for Sec32Fano
    int beta_degree = 1;
    // Kernel expansion order; -1 picks vdim + 2. Orders below the virtual
    // dimension force a vacuous comparison, which check_relation rejects.
    long kernel_order_override = -1;
};

/// Hypotheses of the cited statement, as explicit degree inequalities:
///  - sec3.1: (gamma, D) > 1 for all curve classes (D_degree >= 2) and
///    (beta, c1(TX) - D) + 1 > 0;
///  - sec3.2: Fano threefold with base-point-free anticanonical divisor
///    (N = 3, D = -K = O(4)), no further conditions.
bool check_preconditions(const RelationCase& c);

/// The genus-1 side of the relation as an engine descriptor.
InvariantDescriptor relation_lhs_descriptor(const RelationCase& c);

/// The genus-0 side: (prefactor in u = 1/λ, descriptor) pairs to be summed.
std::vector<std::pair<LaurentSeries, InvariantDescriptor>> relation_rhs_terms(
    const RelationCase& c);

struct RelationOutcome {
    LaurentSeries lhs;  // u = 1/λ chart
    LaurentSeries rhs;
    bool equal = false;
    bool range_mismatch = false;
    long graph_count = 0;
    double wall_seconds = 0.0;
};

/// Computes both sides via independent gw_invariant calls and compares all
/// λ-coefficients exactly. A support-range mismatch is reported as failure,
/// never aligned. Throws on precondition failure and on a vacuous (both
/// sides identically zero) comparison.
RelationOutcome check_relation(const RelationCase& c, Engine& engine);

/// Per-case JSON report. Failing cases keep both sides' coefficients for
/// manual analysis. The second element is true iff every case verified.
std::pair<nlohmann::ordered_json, bool> relation_report(const std::vector<RelationCase>& cases,
                                                        Engine& engine);

nlohmann::ordered_json relation_case_to_json(const RelationCase& c);
RelationCase relation_case_from_json(const nlohmann::json& j);

}  // namespace gwql
