#include "tjq/quaternion.hpp"

#include <stdexcept>
#include <utility>

namespace tjq {

LambdaSig::LambdaSig(Scalar l1, Scalar l2, Scalar l3)
    : _l1(std::move(l1)), _l2(std::move(l2)), _l3(std::move(l3)) {
    if (_l1.mode() != _l2.mode() || _l1.mode() != _l3.mode())
        throw std::domain_error("ring mode mismatch");
}

LambdaSig LambdaSig::symbolic() {
    return LambdaSig(Scalar::lambda_var(0), Scalar::lambda_var(1), Scalar::lambda_var(2));
}

LambdaSig LambdaSig::point(const Rational& l1, const Rational& l2, const Rational& l3) {
    return LambdaSig(Scalar(l1), Scalar(l2), Scalar(l3));
}

LambdaSig LambdaSig::generalized(const Rational& l2, const Rational& l3) {
    return point(Rational(1), l2, l3);
}

void Quaternion::require_same_algebra(const Quaternion& a, const Quaternion& b) {
    if (a._sig != b._sig) throw std::domain_error("algebra mismatch");
}

Quaternion::Quaternion(LambdaSig sig, Scalar s, Scalar c1, Scalar c2, Scalar c3)
    : _sig(std::move(sig)), _s(std::move(s)), _c1(std::move(c1)), _c2(std::move(c2)),
      _c3(std::move(c3)) {
    const RingMode m = _sig.mode();
    if (_s.mode() != m || _c1.mode() != m || _c2.mode() != m || _c3.mode() != m)
        throw std::domain_error("ring mode mismatch");
}

Quaternion Quaternion::zero(const LambdaSig& sig) {
    return from_rationals(sig, 0, 0, 0, 0);
}

Quaternion Quaternion::one(const LambdaSig& sig) {
    return from_rationals(sig, 1, 0, 0, 0);
}

Quaternion Quaternion::basis(const LambdaSig& sig, int index) {
    if (index < 0 || index > 3) throw std::out_of_range("basis index must be 0..3");
    Rational c[4] = {0, 0, 0, 0};
    c[index] = 1;
    return from_rationals(sig, c[0], c[1], c[2], c[3]);
}

Quaternion Quaternion::from_rationals(const LambdaSig& sig, const Rational& s, const Rational& c1,
                                      const Rational& c2, const Rational& c3) {
    const RingMode m = sig.mode();
    return Quaternion(sig, Scalar::constant(s, m), Scalar::constant(c1, m),
                      Scalar::constant(c2, m), Scalar::constant(c3, m));
}

Quaternion operator-(const Quaternion& a) {
    return Quaternion(a._sig, -a._s, -a._c1, -a._c2, -a._c3);
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    Quaternion::require_same_algebra(a, b);
    return Quaternion(a._sig, a._s + b._s, a._c1 + b._c1, a._c2 + b._c2, a._c3 + b._c3);
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    Quaternion::require_same_algebra(a, b);
    return Quaternion(a._sig, a._s - b._s, a._c1 - b._c1, a._c2 - b._c2, a._c3 - b._c3);
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    Quaternion::require_same_algebra(p, q);
    const Scalar& l1 = p._sig.l1();
    const Scalar& l2 = p._sig.l2();
    const Scalar& l3 = p._sig.l3();
    Scalar s = p._s * q._s - l1 * l2 * (p._c1 * q._c1) - l1 * l3 * (p._c2 * q._c2) -
               l2 * l3 * (p._c3 * q._c3);
    Scalar c1 = p._s * q._c1 + p._c1 * q._s + l3 * (p._c2 * q._c3 - p._c3 * q._c2);
    Scalar c2 = p._s * q._c2 + p._c2 * q._s + l2 * (p._c3 * q._c1 - p._c1 * q._c3);
    Scalar c3 = p._s * q._c3 + p._c3 * q._s + l1 * (p._c1 * q._c2 - p._c2 * q._c1);
    return Quaternion(p._sig, std::move(s), std::move(c1), std::move(c2), std::move(c3));
}

Quaternion Quaternion::scaled(const Scalar& k) const {
    return Quaternion(_sig, k * _s, k * _c1, k * _c2, k * _c3);
}

Quaternion Quaternion::scaled(const Rational& k) const {
    return scaled(Scalar::constant(k, _sig.mode()));
}

std::string Quaternion::to_string() const {
    return "(" + _s.to_string() + ", " + _c1.to_string() + ", " + _c2.to_string() + ", " +
           _c3.to_string() + ")";
}

Quaternion named_constant(ConstName name, const LambdaSig& sig) {
    const RingMode m = sig.mode();
    auto rat = [&](int v) { return Scalar::constant(Rational(v), m); };
    switch (name) {
        case ConstName::Theta: return Quaternion::from_rationals(sig, 1, 2, 4, 8);
        case ConstName::BinetA: return Quaternion::from_rationals(sig, 1, 2, -3, 1);
        case ConstName::BinetB: return Quaternion::from_rationals(sig, 2, -3, 1, 2);
        case ConstName::BinetC: return Quaternion::from_rationals(sig, 1, -2, 1, 1);
        case ConstName::BinetD: return Quaternion::from_rationals(sig, -2, 1, 1, -2);
        case ConstName::Omega:
            return Quaternion(sig, rat(0), sig.l3(), sig.l2(), sig.l1());
        case ConstName::Psi: {
            Scalar s = rat(2) + rat(6) * sig.l1() * sig.l2() + rat(3) * sig.l1() * sig.l3() -
                       rat(2) * sig.l2() * sig.l3();
            return Quaternion(sig, std::move(s), rat(1), rat(-5), rat(4));
        }
        case ConstName::Phi: {
            Scalar s = rat(-2) + rat(2) * sig.l1() * sig.l2() - sig.l1() * sig.l3() +
                       rat(2) * sig.l2() * sig.l3();
            return Quaternion(sig, std::move(s), rat(5), rat(-1), rat(-4));
        }
        case ConstName::Xi: {
            Quaternion a = named_constant(ConstName::BinetA, sig);
            Quaternion b = named_constant(ConstName::BinetB, sig);
            return a * a + a * b + b * b;
        }
        case ConstName::XiStar: {
            Quaternion c = named_constant(ConstName::BinetC, sig);
            Quaternion d = named_constant(ConstName::BinetD, sig);
            return c * c + c * d + d * d;
        }
    }
    throw std::invalid_argument("unknown constant name");
}

} // namespace tjq
