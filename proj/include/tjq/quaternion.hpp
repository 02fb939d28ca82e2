/**
 * @file quaternion.hpp
 * @brief The 3-parameter generalized quaternion algebra H(l1,l2,l3).
 *
 * Basis {1, e1, e2, e3} with e1^2 = -l1*l2, e2^2 = -l1*l3, e3^2 = -l2*l3,
 * e1*e2 = -e2*e1 = l1*e3, e1*e3 = -e3*e1 = -l2*e2, e2*e3 = -e3*e2 = l3*e1.
 * Every quaternion carries its parameter triple; operations across
 * different triples throw std::domain_error("algebra mismatch").
 */
#pragma once

#include "tjq/scalar.hpp"

#include <string>

namespace tjq {

/// The parameter triple (l1, l2, l3) identifying one algebra instance.
class LambdaSig {
private:
    Scalar _l1, _l2, _l3;

public:
    /// Throws std::domain_error if the components mix ring modes.
    LambdaSig(Scalar l1, Scalar l2, Scalar l3);

    /// l1, l2, l3 as the three polynomial indeterminates.
    static LambdaSig symbolic();
    static LambdaSig point(const Rational& l1, const Rational& l2, const Rational& l3);

    // rows of the special-cases table
    static LambdaSig generalized(const Rational& l2, const Rational& l3); // (1, l2, l3)
    static LambdaSig split() { return point(1, 1, -1); }
    static LambdaSig hamilton() { return point(1, 1, 1); }
    static LambdaSig semi() { return point(1, 1, 0); }
    static LambdaSig split_semi() { return point(1, -1, 0); }

    RingMode mode() const { return _l1.mode(); }
    const Scalar& l1() const { return _l1; }
    const Scalar& l2() const { return _l2; }
    const Scalar& l3() const { return _l3; }

    friend bool operator==(const LambdaSig& a, const LambdaSig& b) {
        return a._l1 == b._l1 && a._l2 == b._l2 && a._l3 == b._l3;
    }
    friend bool operator!=(const LambdaSig& a, const LambdaSig& b) { return !(a == b); }
};

class Quaternion {
private:
    LambdaSig _sig;
    Scalar _s, _c1, _c2, _c3;

    static void require_same_algebra(const Quaternion& a, const Quaternion& b);

public:
    /// s + c1*e1 + c2*e2 + c3*e3 over sig's ring. Throws std::domain_error
    /// if any coefficient's mode differs from the sig's.
    Quaternion(LambdaSig sig, Scalar s, Scalar c1, Scalar c2, Scalar c3);

    static Quaternion zero(const LambdaSig& sig);
    static Quaternion one(const LambdaSig& sig);
    /// Basis element e1, e2 or e3 (index 1, 2, 3); index 0 gives 1.
    static Quaternion basis(const LambdaSig& sig, int index);
    static Quaternion from_rationals(const LambdaSig& sig, const Rational& s, const Rational& c1,
                                     const Rational& c2, const Rational& c3);

    const LambdaSig& sig() const { return _sig; }
    const Scalar& s() const { return _s; }
    const Scalar& c1() const { return _c1; }
    const Scalar& c2() const { return _c2; }
    const Scalar& c3() const { return _c3; }

    bool is_zero() const { return _s.is_zero() && _c1.is_zero() && _c2.is_zero() && _c3.is_zero(); }

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a._sig == b._sig && a._s == b._s && a._c1 == b._c1 && a._c2 == b._c2 &&
               a._c3 == b._c3;
    }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

    friend Quaternion operator-(const Quaternion& a);
    friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b);

    /// Noncommutative product from the basis multiplication rules:
    ///   s  = p0 q0 - l1 l2 p1 q1 - l1 l3 p2 q2 - l2 l3 p3 q3
    ///   c1 = p0 q1 + p1 q0 + l3 (p2 q3 - p3 q2)
    ///   c2 = p0 q2 + p2 q0 + l2 (p3 q1 - p1 q3)
    ///   c3 = p0 q3 + p3 q0 + l1 (p1 q2 - p2 q1)
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);

    Quaternion scaled(const Scalar& k) const;
    Quaternion scaled(const Rational& k) const;

    Quaternion& operator+=(const Quaternion& b) { return *this = *this + b; }
    Quaternion& operator-=(const Quaternion& b) { return *this = *this - b; }

    /// "(s, c1, c2, c3)" for reports and diagnostics.
    std::string to_string() const;
};

inline Quaternion operator*(const Rational& k, const Quaternion& q) { return q.scaled(k); }

/// Constant quaternions of the closed Binet forms and product identities.
enum class ConstName { Theta, BinetA, BinetB, BinetC, BinetD, Omega, Psi, Phi, Xi, XiStar };

/// Instantiates a named constant over sig's ring. Theta..BinetD have fixed
/// rational coefficients; Omega, Psi, Phi depend on the parameter triple;
/// Xi = A^2 + AB + B^2 and XiStar = C^2 + CD + D^2 are computed products.
Quaternion named_constant(ConstName name, const LambdaSig& sig);

} // namespace tjq
