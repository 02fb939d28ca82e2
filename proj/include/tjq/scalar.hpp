/**
 * @file scalar.hpp
 * @brief Coefficient ring for quaternions: either plain rationals or
 *        polynomials in the three algebra parameters.
 *
 * The ring mode is fixed per computation context; operations on mixed
 * modes throw std::domain_error("ring mode mismatch").
 */
#pragma once

#include "tjq/poly3.hpp"
#include "tjq/rational.hpp"

#include <string>
#include <variant>

namespace tjq {

enum class RingMode { rational, symbolic };

class Scalar {
private:
    std::variant<Rational, Poly3> _v;

    static void require_same_mode(const Scalar& a, const Scalar& b);

public:
    Scalar() : _v(Rational(0)) {}
    explicit Scalar(Rational r) : _v(std::move(r)) {}
    explicit Scalar(Poly3 p) : _v(std::move(p)) {}

    /// Embeds a rational constant into the requested ring.
    static Scalar constant(const Rational& r, RingMode mode);
    /// The indeterminate l1, l2 or l3 (index 0, 1, 2), symbolic mode.
    static Scalar lambda_var(int index) { return Scalar(Poly3::variable(index)); }

    RingMode mode() const {
        return std::holds_alternative<Rational>(_v) ? RingMode::rational : RingMode::symbolic;
    }

    bool is_zero() const;

    /// Underlying value accessors; throw std::logic_error on the wrong mode.
    const Rational& rational() const;
    const Poly3& poly() const;

    /// Substitutes (l1, l2, l3); in rational mode returns the value itself.
    Rational eval(const std::array<Rational, 3>& point) const;

    /// Equality across modes is false, never an error.
    friend bool operator==(const Scalar& a, const Scalar& b) { return a._v == b._v; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    friend Scalar operator-(const Scalar& a);
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    std::string to_string() const;
};

} // namespace tjq
