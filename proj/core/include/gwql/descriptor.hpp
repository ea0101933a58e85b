#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwql/laurent.hpp"
#include "gwql/rational.hpp"

namespace gwql {

/// Target space P^N. Weights are drawn per computation and are not part of
/// the descriptor (cached values are weight-independent finals).
struct SpaceDescriptor {
    int N = 1;

    friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;
};

/// Whether a twist inserts the equivariant Euler class of the index bundle
/// or its inverse. The inverse mode is what fixed-locus localization on the
/// masterspace produces for the ambient factor (the E^- bookkeeping).
enum class EulerMode { Direct, Inverse };

/// One equivariant line bundle O(k) on P^N with fiberwise C* weight
/// lambda_weight (in units of λ).
struct TwistEntry {
    int bundle_degree = 0;
    int lambda_weight = 0;
    EulerMode mode = EulerMode::Direct;

    friend auto operator<=>(const TwistEntry&, const TwistEntry&) = default;
};

/// Insertion at one marking:
///   (polynomial in H) · (product of equivariant Chern factors c_k(TX))
///   · psi^psi_power · [optional kernel 1/(λ - cH - ψ)].
/// Chern factors are evaluated at fixed points as elementary symmetric
/// polynomials in the tangent weights. The kernel is expanded to
/// kernel_order terms; the order must dominate the virtual dimension so
/// truncation never drops a contributing term.
struct InsertionDescriptor {
    std::vector<Rational> h_poly = {Rational(1)};  // coefficients of H^0, H^1, ...
    std::vector<int> chern_factors;                // sorted multiset of k's
    long psi_power = 0;
    std::optional<std::pair<Rational, long>> kernel;  // (c, expansion order)

    void normalize();
    nlohmann::json to_json() const;
    static InsertionDescriptor from_json(const nlohmann::json& j);
};

/// Canonical key naming one GW invariant of P^N: target, twists, genus,
/// degree, insertions. Serialization is unique after normalize(); it is the
/// cache key.
struct InvariantDescriptor {
    SpaceDescriptor space;
    std::vector<TwistEntry> twists;
    int genus = 0;
    int degree = 1;
    std::vector<InsertionDescriptor> insertions;

    /// Sorts twists and insertions and trims insertion polynomials.
    void normalize();

    /// Byte-stable canonical serialization (normalizes a copy).
    std::string canonical_key() const;

    nlohmann::json to_json() const;
    static InvariantDescriptor from_json(const nlohmann::json& j);
    static InvariantDescriptor from_key(const std::string& key);

    /// True when the value can carry λ (some twist has nonzero fiber weight,
    /// or a kernel insertion is present).
    bool carries_lambda() const;

    /// (1-g)(N-3) + d(N+1) + n, the untwisted virtual dimension.
    long vdim_untwisted() const;
};

/// Parsers for the CLI grammar.
SpaceDescriptor parse_space(const std::string& s);                  // "P4"
TwistEntry parse_twist(const std::string& s);                       // "5:+0", "-2:+1:inv"
InsertionDescriptor parse_insertion(const std::string& s);          // "2H;psi=1;kernel=2/1,8;chern=1"
std::string twist_to_string(const TwistEntry& t);
std::string insertion_to_string(const InsertionDescriptor& ins);

/// Engine values are Laurent series in u = 1/λ. JSON reports λ-exponents:
///   {"type":"rational","value":"p/q"}
///   {"type":"laurent","coefficients":{"-2":"p/q",...},"unknown_below": e?}
/// where unknown_below is the λ-exponent below which coefficients are
/// truncated away (absent for exact values).
nlohmann::ordered_json engine_value_to_json(const LaurentSeries& u_series);
LaurentSeries engine_value_from_json(const nlohmann::json& j);

}  // namespace gwql
