/**
 * @file serialize.hpp
 * @brief JSON forms of scalars, quaternions and verification results.
 *
 * Rationals serialize as reduced "p/q" strings ("p" when q = 1);
 * polynomials as a lexicographically sorted list of {coeff, exp} terms;
 * quaternions as {"lambda": [s,s,s], "s": s, "e1": s, "e2": s, "e3": s}.
 */
#pragma once

#include "tjq/identities.hpp"

#include <json.hpp>

#include <array>
#include <string_view>

namespace tjq {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json poly_json(const Poly3& p);
Json scalar_json(const Scalar& s);
Json lambda_json(const LambdaSig& sig);
Json quaternion_json(const Quaternion& q);
Json result_json(const VerificationResult& r);

/// Parses "a,b,c" with rational components. Throws std::invalid_argument.
std::array<Rational, 3> parse_lambda_triple(std::string_view text);

} // namespace tjq
