#include "tjq/scalar.hpp"

#include <stdexcept>

namespace tjq {

void Scalar::require_same_mode(const Scalar& a, const Scalar& b) {
    if (a._v.index() != b._v.index()) throw std::domain_error("ring mode mismatch");
}

Scalar Scalar::constant(const Rational& r, RingMode mode) {
    if (mode == RingMode::rational) return Scalar(r);
    return Scalar(Poly3::constant(r));
}

bool Scalar::is_zero() const {
    if (const auto* r = std::get_if<Rational>(&_v)) return r->is_zero();
    return std::get<Poly3>(_v).is_zero();
}

const Rational& Scalar::rational() const {
    if (const auto* r = std::get_if<Rational>(&_v)) return *r;
    throw std::logic_error("scalar is not in rational mode");
}

const Poly3& Scalar::poly() const {
    if (const auto* p = std::get_if<Poly3>(&_v)) return *p;
    throw std::logic_error("scalar is not in symbolic mode");
}

Rational Scalar::eval(const std::array<Rational, 3>& point) const {
    if (const auto* r = std::get_if<Rational>(&_v)) return *r;
    return std::get<Poly3>(_v).eval(point);
}

Scalar operator-(const Scalar& a) {
    if (const auto* r = std::get_if<Rational>(&a._v)) return Scalar(-*r);
    return Scalar(-std::get<Poly3>(a._v));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::require_same_mode(a, b);
    if (const auto* r = std::get_if<Rational>(&a._v)) return Scalar(*r + std::get<Rational>(b._v));
    return Scalar(std::get<Poly3>(a._v) + std::get<Poly3>(b._v));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar::require_same_mode(a, b);
    if (const auto* r = std::get_if<Rational>(&a._v)) return Scalar(*r - std::get<Rational>(b._v));
    return Scalar(std::get<Poly3>(a._v) - std::get<Poly3>(b._v));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::require_same_mode(a, b);
    if (const auto* r = std::get_if<Rational>(&a._v)) return Scalar(*r * std::get<Rational>(b._v));
    return Scalar(std::get<Poly3>(a._v) * std::get<Poly3>(b._v));
}

std::string Scalar::to_string() const {
    if (const auto* r = std::get_if<Rational>(&_v)) return r->to_string();
    return std::get<Poly3>(_v).to_string();
}

} // namespace tjq
