#include "tjq/poly3.hpp"

#include <stdexcept>

namespace tjq {

void Poly3::prune() {
    for (auto it = _terms.begin(); it != _terms.end();) {
        if (it->second.is_zero())
            it = _terms.erase(it);
        else
            ++it;
    }
}

Poly3 Poly3::constant(const Rational& c) {
    Poly3 p;
    if (!c.is_zero()) p._terms.emplace(Exp3{0, 0, 0}, c);
    return p;
}

Poly3 Poly3::variable(int index) {
    if (index < 0 || index > 2) throw std::out_of_range("variable index must be 0, 1 or 2");
    Exp3 e{0, 0, 0};
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(Rational(1), e);
}

Poly3 Poly3::monomial(const Rational& c, const Exp3& e) {
    Poly3 p;
    if (!c.is_zero()) p._terms.emplace(e, c);
    return p;
}

bool Poly3::is_constant() const {
    return _terms.empty() || (_terms.size() == 1 && _terms.begin()->first == Exp3{0, 0, 0});
}

Rational Poly3::constant_value() const {
    if (_terms.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return _terms.begin()->second;
}

Rational Poly3::eval(const std::array<Rational, 3>& point) const {
    auto power = [](const Rational& base, std::uint16_t e) {
        Rational r(1);
        for (std::uint16_t i = 0; i < e; ++i) r *= base;
        return r;
    };
    Rational sum(0);
    for (const auto& [e, c] : _terms) {
        Rational term = c;
        for (int v = 0; v < 3; ++v)
            if (e[static_cast<std::size_t>(v)] != 0)
                term *= power(point[static_cast<std::size_t>(v)], e[static_cast<std::size_t>(v)]);
        sum += term;
    }
    return sum;
}

Poly3 operator-(const Poly3& a) {
    Poly3 r;
    for (const auto& [e, c] : a._terms) r._terms.emplace(e, -c);
    return r;
}

Poly3 operator+(const Poly3& a, const Poly3& b) {
    Poly3 r = a;
    for (const auto& [e, c] : b._terms) {
        auto [it, inserted] = r._terms.emplace(e, c);
        if (!inserted) it->second += c;
    }
    r.prune();
    return r;
}

Poly3 operator-(const Poly3& a, const Poly3& b) {
    Poly3 r = a;
    for (const auto& [e, c] : b._terms) {
        auto [it, inserted] = r._terms.emplace(e, -c);
        if (!inserted) it->second -= c;
    }
    r.prune();
    return r;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
    Poly3 r;
    for (const auto& [ea, ca] : a._terms) {
        for (const auto& [eb, cb] : b._terms) {
            Exp3 e{static_cast<std::uint16_t>(ea[0] + eb[0]),
                   static_cast<std::uint16_t>(ea[1] + eb[1]),
                   static_cast<std::uint16_t>(ea[2] + eb[2])};
            Rational c = ca * cb;
            auto [it, inserted] = r._terms.emplace(e, c);
            if (!inserted) it->second += c;
        }
    }
    r.prune();
    return r;
}

std::string Poly3::to_string() const {
    if (_terms.empty()) return "0";
    static const char* names[3] = {"l1", "l2", "l3"};
    std::string out;
    bool first = true;
    for (const auto& [e, c] : _terms) {
        Rational mag = (c.sgn() < 0) ? -c : c;
        if (first) {
            if (c.sgn() < 0) out += '-';
            first = false;
        } else {
            out += (c.sgn() < 0) ? " - " : " + ";
        }
        bool has_vars = (e[0] | e[1] | e[2]) != 0;
        bool unit = (mag == Rational(1));
        if (!unit || !has_vars) out += mag.to_string();
        bool need_star = !unit && has_vars;
        for (int v = 0; v < 3; ++v) {
            auto ev = e[static_cast<std::size_t>(v)];
            if (ev == 0) continue;
            if (need_star) out += '*';
            out += names[v];
            if (ev > 1) {
                out += '^';
                out += std::to_string(ev);
            }
            need_star = true;
        }
    }
    return out;
}

} // namespace tjq
