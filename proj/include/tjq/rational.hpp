/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational numbers in canonical reduced form.
 *
 * Numerator and denominator are GMP integers. Invariants:
 * gcd(|num|, den) = 1, den >= 1, zero is stored as 0/1.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tjq {

using BigInt = mpz_class;
using Index = std::int64_t;

class Rational {
private:
    BigInt _num;
    BigInt _den; // always >= 1

    void canonicalize();

public:
    Rational() : _num(0), _den(1) {}
    Rational(int v) : _num(v), _den(1) {}
    Rational(long v) : _num(v), _den(1) {}
    Rational(long long v) : _num(static_cast<long>(v)), _den(1) {}
    Rational(const BigInt& v) : _num(v), _den(1) {}

    /// Builds num/den in canonical form. Throws std::domain_error on den = 0.
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return _num; }
    const BigInt& den() const { return _den; }

    bool is_zero() const { return _num == 0; }
    bool is_integer() const { return _den == 1; }
    int sgn() const { return mpz_sgn(_num.get_mpz_t()); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a._num == b._num && a._den == b._den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a._num * b._den < b._num * a._den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator-(const Rational& a);
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    /// Throws std::domain_error on division by zero.
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    /// "p/q" with q > 0, or just "p" when q = 1.
    std::string to_string() const;

    /// Parses "p", "p/q" (optional leading '-' or '+'). Throws
    /// std::invalid_argument on syntax errors, std::domain_error on q = 0.
    static Rational parse(std::string_view s);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);
};

/// Exact 2^e for any integer e (negative e gives 1/2^|e|).
Rational pow2(Index e);

} // namespace tjq
