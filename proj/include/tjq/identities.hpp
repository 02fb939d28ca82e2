/**
 * @file identities.hpp
 * @brief The closed catalog of JG/KG identities as checkable equations,
 *        plus the sweep engine used by the verification CLI.
 *
 * Every check computes its left side only from the coefficient-wise
 * definition of JG/KG plus algebra operations, and its right side only
 * from the identity's closed form; the two routes share nothing beyond
 * scalar and quaternion arithmetic, so one bug cannot cancel another.
 *
 * In symbolic mode the parameters l1, l2, l3 stay indeterminates, so a
 * passing check is a polynomial identity valid for every real parameter
 * choice.
 */
#pragma once

#include "tjq/quat_sequences.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace tjq {

enum class IdentityId {
    shift3_j,
    shift3_k,
    binet_j,
    binet_k,
    genfun_j,
    genfun_k,
    vajda_j,
    vajda_k,
    catalan_j,
    catalan_k,
    cassini_j,
    cassini_k,
    docagne_j,
    docagne_k,
    triplesum_j,
    triplesum_k,
    k_from_j,
    j_from_k,
    partial_sum_j,
    partial_sum_k,
    shift2m4_j,
    shift2m4_k,
    comb_plus,
    comb_minus,
    prod_m1,
    prod_m2,
    prod_m3,
};

/// All identities in catalog order.
const std::vector<IdentityId>& identity_catalog();

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

/// Integer parameters an identity quantifies over. docagne uses (n, a)
/// with the second factor index m = n + a.
enum class ParamShape { none, n, na, nab };
ParamShape identity_param_shape(IdentityId id);

struct IdentityParams {
    std::optional<Index> n, a, b;
};

struct CheckOptions {
    /// Replace K0 = 3 with the inconsistent K0 = 0 in the definitional
    /// K route. Closed forms are left untouched, so affected checks fail.
    bool k0_paper = false;
};

struct VerificationResult {
    IdentityId id;
    IdentityParams params;
    /// Engaged in point mode; empty means symbolic.
    std::optional<std::array<Rational, 3>> lambda_point;
    Quaternion lhs, rhs;
    bool pass;
    /// True when the parameters fall outside the index range the identity
    /// is stated for (e.g. a shift check at negative n). Informative
    /// results never count against conformance.
    bool informative;
};

/// Evaluates one identity at one parameter point. Throws
/// std::invalid_argument when params do not match the identity's shape or
/// violate a hard precondition (series index or sum length below zero).
VerificationResult check_identity(IdentityId id, const IdentityParams& params,
                                  const LambdaSig& sig, const CheckOptions& opts = {});

struct SuiteOptions {
    std::vector<IdentityId> ids;
    Index n_from = -12, n_to = 60;
    Index a_from = -6, a_to = 6;
    Index b_from = -6, b_to = 6;
    bool symbolic = true;
    /// Sample points for point mode (ignored when symbolic).
    std::vector<std::array<Rational, 3>> points;
    CheckOptions check;
    /// Worker threads; 0 picks the hardware concurrency. The result list
    /// is identical for any thread count.
    unsigned threads = 0;
};

/// Cartesian sweep over the applicable parameters of every requested
/// identity. Results are ordered: conformance failures first, then
/// informative mismatches, then the rest in parameter order.
std::vector<VerificationResult> run_suite(const SuiteOptions& options);

/// The four special parameter triples of the algebra followed by `count`
/// seeded random rational triples with numerators and denominators in
/// [-9, 9] (denominators nonzero).
std::vector<std::array<Rational, 3>> sample_lambda_points(std::uint64_t seed, std::size_t count);

struct IdTotals {
    IdentityId id;
    std::size_t checked = 0;
    std::size_t passed = 0;      // conformance passes
    std::size_t failed = 0;      // conformance failures
    std::size_t informative = 0; // informative checks of either outcome
};

/// Per-identity totals in catalog order.
std::vector<IdTotals> summarize(const std::vector<VerificationResult>& results);

} // namespace tjq
