#include "tjq/quat_sequences.hpp"

#include <stdexcept>

namespace tjq {

Quaternion jg(Index n, const LambdaSig& sig) {
    return Quaternion::from_rationals(sig, j3(n), j3(n + 1), j3(n + 2), j3(n + 3));
}

Quaternion kg(Index n, const LambdaSig& sig, const Rational& k0) {
    return Quaternion::from_rationals(sig, k3(n, k0), k3(n + 1, k0), k3(n + 2, k0),
                                      k3(n + 3, k0));
}

namespace {

Quaternion x_scaled(int x, const Quaternion& q) {
    // x is a cyclic-sequence value, always -1, 0 or 1
    if (x == 0) return Quaternion::zero(q.sig());
    return (x > 0) ? q : -q;
}

} // namespace

Quaternion jg_binet(Index n, const LambdaSig& sig) {
    Quaternion theta = named_constant(ConstName::Theta, sig);
    Quaternion a = named_constant(ConstName::BinetA, sig);
    Quaternion b = named_constant(ConstName::BinetB, sig);
    Quaternion t = theta.scaled(pow2(n + 1)) + x_scaled(x_cyclic(n), a) -
                   x_scaled(x_cyclic(n + 1), b);
    return t.scaled(Rational(BigInt(1), BigInt(7)));
}

Quaternion kg_binet(Index n, const LambdaSig& sig) {
    Quaternion theta = named_constant(ConstName::Theta, sig);
    Quaternion c = named_constant(ConstName::BinetC, sig);
    Quaternion d = named_constant(ConstName::BinetD, sig);
    return theta.scaled(pow2(n)) + x_scaled(x_cyclic(n), c) - x_scaled(x_cyclic(n + 1), d);
}

Quaternion jg_binet_cases(Index n, const LambdaSig& sig) {
    Quaternion theta = named_constant(ConstName::Theta, sig).scaled(pow2(n + 1));
    Quaternion a = named_constant(ConstName::BinetA, sig);
    Quaternion b = named_constant(ConstName::BinetB, sig);
    Quaternion t = [&] {
        switch (((n % 3) + 3) % 3) {
            case 0: return theta - b;
            case 1: return theta + a + b;
            default: return theta - a;
        }
    }();
    return t.scaled(Rational(BigInt(1), BigInt(7)));
}

Quaternion kg_binet_cases(Index n, const LambdaSig& sig) {
    Quaternion theta = named_constant(ConstName::Theta, sig).scaled(pow2(n));
    Quaternion c = named_constant(ConstName::BinetC, sig);
    Quaternion d = named_constant(ConstName::BinetD, sig);
    switch (((n % 3) + 3) % 3) {
        case 0: return theta - d;
        case 1: return theta + c + d;
        default: return theta - c;
    }
}

std::vector<Quaternion> genfun_coeffs(QuatSeqKind kind, const LambdaSig& sig, std::size_t count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    std::vector<Quaternion> numerator;
    if (kind == QuatSeqKind::jg) {
        numerator = {Quaternion::from_rationals(sig, 0, 1, 1, 2),
                     Quaternion::from_rationals(sig, 1, 0, 1, 3),
                     Quaternion::from_rationals(sig, 0, 0, 2, 2)};
    } else {
        numerator = {Quaternion::from_rationals(sig, 3, 1, 3, 10),
                     -Quaternion::from_rationals(sig, 2, -2, -7, -5),
                     -Quaternion::from_rationals(sig, 1, -6, -2, -6)};
    }
    std::vector<Quaternion> c;
    c.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Quaternion v = (i < 3) ? numerator[i] : Quaternion::zero(sig);
        if (i >= 1) v += c[i - 1];
        if (i >= 2) v += c[i - 2];
        if (i >= 3) v += c[i - 3].scaled(Rational(2));
        c.push_back(std::move(v));
    }
    return c;
}

namespace {

std::pair<Quaternion, Quaternion> family_pair(const LambdaSig& sig, BinetFamily family) {
    if (family == BinetFamily::j)
        return {named_constant(ConstName::BinetA, sig), named_constant(ConstName::BinetB, sig)};
    return {named_constant(ConstName::BinetC, sig), named_constant(ConstName::BinetD, sig)};
}

} // namespace

Quaternion helper_z(Index n, const LambdaSig& sig, BinetFamily family) {
    auto [a, b] = family_pair(sig, family);
    return x_scaled(x_cyclic(n), a) - x_scaled(x_cyclic(n + 1), b);
}

Quaternion helper_y(Index n, Index a, const LambdaSig& sig, BinetFamily family) {
    auto [qa, qb] = family_pair(sig, family);
    Quaternion first =
        qa.scaled(pow2(a)) + x_scaled(x_cyclic(a + 2), qa) - x_scaled(x_cyclic(a), qb);
    Quaternion second =
        qb.scaled(pow2(a)) + x_scaled(x_cyclic(a), qa) - x_scaled(x_cyclic(a + 1), qb);
    return x_scaled(x_cyclic(n), first) - x_scaled(x_cyclic(n + 1), second);
}

} // namespace tjq
