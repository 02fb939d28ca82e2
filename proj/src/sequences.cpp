#include "tjq/sequences.hpp"

#include <stdexcept>
#include <utility>

namespace tjq {

int x_cyclic(Index n) {
    switch (((n % 3) + 3) % 3) {
        case 0: return 0;
        case 1: return 1;
        default: return -1;
    }
}

namespace {

BigInt forward_int(Index n, BigInt s0, BigInt s1, BigInt s2) {
    if (n == 0) return s0;
    if (n == 1) return s1;
    if (n == 2) return s2;
    for (Index i = 3; i <= n; ++i) {
        BigInt next = s2 + s1 + 2 * s0;
        s0 = std::move(s1);
        s1 = std::move(s2);
        s2 = std::move(next);
    }
    return s2;
}

Rational backward_rat(Index n, Rational s0, Rational s1, Rational s2) {
    // s(m-3) = (s(m) - s(m-1) - s(m-2)) / 2, stepping the window down to n
    const Rational half(BigInt(1), BigInt(2));
    for (Index i = 0; i > n; --i) {
        Rational prev = (s2 - s1 - s0) * half;
        s2 = std::move(s1);
        s1 = std::move(s0);
        s0 = std::move(prev);
    }
    return s0;
}

} // namespace

BigInt j3_int(Index n) {
    if (n < 0) throw std::domain_error("j3_int requires n >= 0");
    return forward_int(n, 0, 1, 1);
}

BigInt k3_int(Index n, const BigInt& k0) {
    if (n < 0) throw std::domain_error("k3_int requires n >= 0");
    return forward_int(n, k0, 1, 3);
}

Rational j3(Index n) {
    if (n >= 0) return Rational(j3_int(n));
    return backward_rat(n, Rational(0), Rational(1), Rational(1));
}

Rational k3(Index n, const Rational& k0) {
    if (n >= 0 && k0.is_integer()) return Rational(k3_int(n, k0.num()));
    return backward_rat(n, k0, Rational(1), Rational(3));
}

Rational j3_binet(Index n) {
    Rational t = pow2(n + 1) + Rational(x_cyclic(n)) - Rational(2 * x_cyclic(n + 1));
    return t / Rational(7);
}

Rational k3_binet(Index n) {
    return pow2(n) + Rational(x_cyclic(n)) + Rational(2 * x_cyclic(n + 1));
}

Mat3 Mat3::identity() {
    return Mat3{{BigInt(1), BigInt(0), BigInt(0), BigInt(0), BigInt(1), BigInt(0), BigInt(0),
                 BigInt(0), BigInt(1)}};
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            BigInt acc = a.m[3 * i] * b.m[j];
            acc += a.m[3 * i + 1] * b.m[3 + j];
            acc += a.m[3 * i + 2] * b.m[6 + j];
            r.m[3 * i + j] = std::move(acc);
        }
    return r;
}

Mat3 Mat3::pow(unsigned long long e) const {
    Mat3 result = identity();
    Mat3 base = *this;
    while (e != 0) {
        if (e & 1ULL) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

BigInt Mat3::det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

Mat3 companion_matrix() {
    return Mat3{{BigInt(1), BigInt(1), BigInt(2), BigInt(1), BigInt(0), BigInt(0), BigInt(0),
                 BigInt(1), BigInt(0)}};
}

BigInt seq_fast(SeqKind kind, Index n, const BigInt& k0) {
    if (n < 0) throw std::domain_error("fast engine requires n >= 0");
    BigInt s0 = (kind == SeqKind::j3) ? BigInt(0) : k0;
    BigInt s1 = 1;
    BigInt s2 = (kind == SeqKind::j3) ? BigInt(1) : BigInt(3);
    Mat3 p = companion_matrix().pow(static_cast<unsigned long long>(n));
    // bottom row of M^n applied to (s2, s1, s0) yields s(n)
    return p.m[6] * s2 + p.m[7] * s1 + p.m[8] * s0;
}

Rational sum_j3(Index n) {
    if (n < 0) throw std::domain_error("partial sum requires n >= 0");
    return Rational(j3_int(n + 2) + 2 * j3_int(n) - 1, BigInt(3));
}

Rational sum_k3(Index n, const Rational& k0) {
    if (n < 0) throw std::domain_error("partial sum requires n >= 0");
    return (k3(n + 2, k0) + Rational(2) * k3(n, k0)) / Rational(3);
}

namespace {

std::vector<BigInt> genfun_series(const std::array<BigInt, 3>& numerator, std::size_t count) {
    // sigma(x) = 1 - x - x^2 - 2x^3 forces c(n) = c(n-1) + c(n-2) + 2 c(n-3)
    // plus the numerator coefficient at n.
    std::vector<BigInt> c;
    c.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        BigInt v = (i < 3) ? numerator[i] : BigInt(0);
        if (i >= 1) v += c[i - 1];
        if (i >= 2) v += c[i - 2];
        if (i >= 3) v += 2 * c[i - 3];
        c.push_back(std::move(v));
    }
    return c;
}

} // namespace

std::vector<BigInt> j3_genfun_coeffs(std::size_t count) {
    return genfun_series({BigInt(0), BigInt(1), BigInt(0)}, count);
}

std::vector<BigInt> k3_genfun_coeffs(std::size_t count) {
    return genfun_series({BigInt(3), BigInt(-2), BigInt(-1)}, count);
}

} // namespace tjq
