/**
 * @file quat_sequences.hpp
 * @brief Quaternions with four consecutive third-order Jacobsthal (JG) or
 *        modified third-order Jacobsthal (KG) numbers as coefficients,
 *        their closed Binet forms and generating-function expansion.
 */
#pragma once

#include "tjq/quaternion.hpp"
#include "tjq/sequences.hpp"

#include <cstddef>
#include <vector>

namespace tjq {

enum class QuatSeqKind { jg, kg };

/// JG(n) = J(n) + J(n+1) e1 + J(n+2) e2 + J(n+3) e3, any integer n.
Quaternion jg(Index n, const LambdaSig& sig);
/// KG(n) = K(n) + K(n+1) e1 + K(n+2) e2 + K(n+3) e3.
Quaternion kg(Index n, const LambdaSig& sig, const Rational& k0 = Rational(3));

/// Closed form (2^(n+1) Theta + X(n) A - X(n+1) B) / 7.
Quaternion jg_binet(Index n, const LambdaSig& sig);
/// Closed form 2^n Theta + X(n) C - X(n+1) D.
Quaternion kg_binet(Index n, const LambdaSig& sig);

/// The same closed forms written out by n mod 3; an independent
/// evaluation path kept separate from the X-form on purpose.
Quaternion jg_binet_cases(Index n, const LambdaSig& sig);
Quaternion kg_binet_cases(Index n, const LambdaSig& sig);

/// First `count` power-series coefficients of the generating function
///   JG: [e1 + e2 + 2 e3 + (1 + e2 + 3 e3) x + 2 (e2 + e3) x^2] / sigma(x)
///   KG: [3 + e1 + 3 e2 + 10 e3 - (2 - 2 e1 - 7 e2 - 5 e3) x
///        - (1 - 6 e1 - 2 e2 - 6 e3) x^2] / sigma(x)
/// with sigma(x) = 1 - x - x^2 - 2 x^3, expanded through the coefficient
/// recurrence induced by sigma. Independent of jg/kg by construction.
std::vector<Quaternion> genfun_coeffs(QuatSeqKind kind, const LambdaSig& sig, std::size_t count);

/// Selects the (A, B) constants of the JG Binet form or the (C, D) pair
/// of the KG form in the helper quaternions below.
enum class BinetFamily { j, k };

/// Z(n) = X(n) A - X(n+1) B (family j), or with (C, D) (family k).
Quaternion helper_z(Index n, const LambdaSig& sig, BinetFamily family);

/// Y_n(a) = X(n) (2^a A + X(a+2) A - X(a) B)
///        - X(n+1) (2^a B + X(a) A - X(a+1) B), with (C, D) for family k.
Quaternion helper_y(Index n, Index a, const LambdaSig& sig, BinetFamily family);

} // namespace tjq
