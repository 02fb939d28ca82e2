#include "tjq/rational.hpp"

#include <cctype>
#include <ostream>

namespace tjq {

void Rational::canonicalize() {
    if (_num == 0) {
        _den = 1;
        return;
    }
    if (_den < 0) {
        _num = -_num;
        _den = -_den;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), _num.get_mpz_t(), _den.get_mpz_t());
    if (g != 1) {
        _num /= g;
        _den /= g;
    }
}

Rational::Rational(BigInt num, BigInt den) : _num(std::move(num)), _den(std::move(den)) {
    if (_den == 0) throw std::domain_error("division by zero");
    canonicalize();
}

Rational operator-(const Rational& a) {
    Rational r;
    r._num = -a._num;
    r._den = a._den;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    r._num = a._num * b._den + b._num * a._den;
    r._den = a._den * b._den;
    r.canonicalize();
    return r;
}

Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    r._num = a._num * b._den - b._num * a._den;
    r._den = a._den * b._den;
    r.canonicalize();
    return r;
}

Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    r._num = a._num * b._num;
    r._den = a._den * b._den;
    r.canonicalize();
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b._num == 0) throw std::domain_error("division by zero");
    Rational r;
    r._num = a._num * b._den;
    r._den = a._den * b._num;
    r.canonicalize();
    return r;
}

std::string Rational::to_string() const {
    std::string s = _num.get_str();
    if (_den != 1) {
        s += '/';
        s += _den.get_str();
    }
    return s;
}

Rational Rational::parse(std::string_view s) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string_view num_part = (slash == std::string_view::npos) ? s : s.substr(0, slash);
    std::string_view den_part = (slash == std::string_view::npos) ? std::string_view{} : s.substr(slash + 1);
    if (!is_int(num_part) || (slash != std::string_view::npos && !is_int(den_part)))
        throw std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
    BigInt num(std::string(num_part), 10);
    BigInt den = (slash == std::string_view::npos) ? BigInt(1) : BigInt(std::string(den_part), 10);
    return Rational(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Rational pow2(Index e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e >= 0 ? e : -e));
    if (e >= 0) return Rational(p);
    return Rational(BigInt(1), p);
}

} // namespace tjq
