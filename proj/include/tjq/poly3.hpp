/**
 * @file poly3.hpp
 * @brief Sparse polynomials in the three algebra parameters l1, l2, l3
 *        over Rational coefficients.
 *
 * Canonical form: no zero coefficients are stored and terms iterate in
 * lexicographic exponent order. Ring operations only (no division).
 */
#pragma once

#include "tjq/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace tjq {

/// Exponents of (l1, l2, l3) in one monomial.
using Exp3 = std::array<std::uint16_t, 3>;

class Poly3 {
private:
    std::map<Exp3, Rational> _terms;

    void prune(); // drop zero coefficients

public:
    Poly3() = default;

    static Poly3 constant(const Rational& c);
    /// The lone variable l1, l2 or l3 (index 0, 1, 2).
    static Poly3 variable(int index);
    static Poly3 monomial(const Rational& c, const Exp3& e);

    const std::map<Exp3, Rational>& terms() const { return _terms; }

    bool is_zero() const { return _terms.empty(); }
    bool is_constant() const;
    /// Constant term (0 for the zero polynomial). Requires is_constant().
    Rational constant_value() const;

    /// Exact substitution of (l1, l2, l3).
    Rational eval(const std::array<Rational, 3>& point) const;

    friend bool operator==(const Poly3& a, const Poly3& b) { return a._terms == b._terms; }
    friend bool operator!=(const Poly3& a, const Poly3& b) { return !(a == b); }

    friend Poly3 operator-(const Poly3& a);
    friend Poly3 operator+(const Poly3& a, const Poly3& b);
    friend Poly3 operator-(const Poly3& a, const Poly3& b);
    friend Poly3 operator*(const Poly3& a, const Poly3& b);

    Poly3& operator+=(const Poly3& b) { return *this = *this + b; }
    Poly3& operator-=(const Poly3& b) { return *this = *this - b; }
    Poly3& operator*=(const Poly3& b) { return *this = *this * b; }

    std::string to_string() const;
};

} // namespace tjq
