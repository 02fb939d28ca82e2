/**
 * @file sequences.hpp
 * @brief Third-order Jacobsthal numbers J(n), their modified companion K(n)
 *        and the period-3 cyclic sequence X(n), for all integer indices.
 *
 * Both J and K satisfy s(n) = s(n-1) + s(n-2) + 2 s(n-3). Initial vectors
 * are (J0,J1,J2) = (0,1,1) and (K0,K1,K2) = (3,1,3). Negative indices are
 * valued in rationals through the backward recurrence
 * s(n-3) = (s(n) - s(n-1) - s(n-2)) / 2.
 *
 * K0 is configurable so that the inconsistent alternative K0 = 0 found in
 * parts of the literature can be exercised (it breaks the identity suite;
 * see the CLI flag --k0-paper).
 */
#pragma once

#include "tjq/rational.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace tjq {

/// 0, 1, -1 for n = 0, 1, 2 (mod 3), with the non-negative remainder.
int x_cyclic(Index n);

/// J(n) for n >= 0 as an integer (iterative recurrence).
BigInt j3_int(Index n);
/// K(n) for n >= 0 as an integer.
BigInt k3_int(Index n, const BigInt& k0 = BigInt(3));

/// J(n) for any integer n.
Rational j3(Index n);
/// K(n) for any integer n.
Rational k3(Index n, const Rational& k0 = Rational(3));

/// Closed form (2^(n+1) + X(n) - 2 X(n+1)) / 7; equals j3(n) for all n.
Rational j3_binet(Index n);
/// Closed form 2^n + X(n) + 2 X(n+1); equals k3(n) for all n.
Rational k3_binet(Index n);

enum class SeqKind { j3, k3 };

/// 3x3 integer matrix, row-major.
struct Mat3 {
    std::array<BigInt, 9> m;

    static Mat3 identity();
    friend Mat3 operator*(const Mat3& a, const Mat3& b);
    friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }
    Mat3 pow(unsigned long long e) const;
    BigInt det() const;
};

/// The fundamental matrix [[1,1,2],[1,0,0],[0,1,0]] advancing the state
/// (s(n+2), s(n+1), s(n)).
Mat3 companion_matrix();

/// O(log n) evaluation via binary powers of the fundamental matrix.
/// Throws std::domain_error for n < 0.
BigInt seq_fast(SeqKind kind, Index n, const BigInt& k0 = BigInt(3));

/// Sum of J(0..n) by the closed form (J(n+2) + 2 J(n) - 1) / 3.
/// Throws std::domain_error for n < 0.
Rational sum_j3(Index n);
/// Sum of K(0..n) by the closed form (K(n+2) + 2 K(n)) / 3.
Rational sum_k3(Index n, const Rational& k0 = Rational(3));

/// First `count` power-series coefficients of x / (1 - x - x^2 - 2x^3).
std::vector<BigInt> j3_genfun_coeffs(std::size_t count);
/// First `count` coefficients of (3 - 2x - x^2) / (1 - x - x^2 - 2x^3).
std::vector<BigInt> k3_genfun_coeffs(std::size_t count);

} // namespace tjq
