#include "tjq/quaternion.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace tjq;

namespace {

Quaternion q4(const LambdaSig& sig, int s, int c1, int c2, int c3) {
    return Quaternion::from_rationals(sig, Rational(s), Rational(c1), Rational(c2), Rational(c3));
}

Scalar sym_poly(const Poly3& p) { return Scalar(p); }

} // namespace

TEST_SUITE("quaternion") {

TEST_CASE("one is the multiplicative identity") {
    LambdaSig sig = LambdaSig::symbolic();
    std::mt19937_64 gen(5);
    for (int i = 0; i < 20; ++i) {
        Quaternion q = test::random_quaternion(gen, sig);
        CHECK(Quaternion::one(sig) * q == q);
        CHECK(q * Quaternion::one(sig) == q);
        CHECK(q + Quaternion::zero(sig) == q);
    }
}

TEST_CASE("construction rejects mode mixing, operations reject sig mixing") {
    LambdaSig ham = LambdaSig::hamilton();
    CHECK_THROWS_WITH_AS(Quaternion(ham, Scalar::lambda_var(0), Scalar(Rational(0)),
                                    Scalar(Rational(0)), Scalar(Rational(0))),
                         "ring mode mismatch", std::domain_error);
    Quaternion a = q4(ham, 1, 2, 3, 4);
    Quaternion b = q4(LambdaSig::split(), 1, 2, 3, 4);
    CHECK_THROWS_WITH_AS(a + b, "algebra mismatch", std::domain_error);
    CHECK_THROWS_AS(a * b, std::domain_error);
    CHECK(a != b);
}

TEST_CASE("scaling by 1/7 undoes scaling by 7") {
    LambdaSig sig = LambdaSig::symbolic();
    std::mt19937_64 gen(17);
    Quaternion q = test::random_quaternion(gen, sig);
    CHECK(q.scaled(Rational(7)).scaled(Rational(BigInt(1), BigInt(7))) == q);
}

TEST_CASE("basis products match the multiplication rules") {
    LambdaSig sig = LambdaSig::symbolic();
    Quaternion e1 = Quaternion::basis(sig, 1);
    Quaternion e2 = Quaternion::basis(sig, 2);
    Quaternion e3 = Quaternion::basis(sig, 3);
    const Scalar& l1 = sig.l1();
    const Scalar& l2 = sig.l2();
    const Scalar& l3 = sig.l3();

    CHECK(e1 * e2 == e3.scaled(l1));
    CHECK(e1 * e3 == e2.scaled(l2).scaled(Rational(-1)));
    CHECK(e2 * e3 == e1.scaled(l3));
    CHECK(e1 * e1 == Quaternion::one(sig).scaled(-(l1 * l2)));
    CHECK(e2 * e2 == Quaternion::one(sig).scaled(-(l1 * l3)));
    CHECK(e3 * e3 == Quaternion::one(sig).scaled(-(l2 * l3)));

    // anticommutation
    CHECK(e1 * e2 == -(e2 * e1));
    CHECK(e1 * e3 == -(e3 * e1));
    CHECK(e2 * e3 == -(e3 * e2));

    // triple product collapses to the parameter product
    CHECK(e1 * e2 * e3 == Quaternion::one(sig).scaled(-(l1 * l2 * l3)));
}

TEST_CASE("product equals the basis-table oracle") {
    std::mt19937_64 gen(99);
    for (int i = 0; i < 120; ++i) {
        auto lam = test::random_lambda(gen);
        LambdaSig sig = LambdaSig::point(lam[0], lam[1], lam[2]);
        Quaternion p = test::random_quaternion(gen, sig);
        Quaternion q = test::random_quaternion(gen, sig);
        CHECK(p * q == test::mul_via_basis_table(p, q));
    }
    LambdaSig sym = LambdaSig::symbolic();
    for (int i = 0; i < 80; ++i) {
        Quaternion p = test::random_quaternion(gen, sym);
        Quaternion q = test::random_quaternion(gen, sym);
        CHECK(p * q == test::mul_via_basis_table(p, q));
    }
}

TEST_CASE("associativity on every basis triple, symbolically") {
    LambdaSig sig = LambdaSig::symbolic();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                Quaternion a = Quaternion::basis(sig, i + 1);
                Quaternion b = Quaternion::basis(sig, j + 1);
                Quaternion c = Quaternion::basis(sig, k + 1);
                CHECK((a * b) * c == a * (b * c));
            }
}

TEST_CASE("associativity, distributivity and scalar centrality on random input") {
    std::mt19937_64 gen(123);
    for (int i = 0; i < 200; ++i) {
        auto lam = test::random_lambda(gen);
        LambdaSig sig = LambdaSig::point(lam[0], lam[1], lam[2]);
        Quaternion p = test::random_quaternion(gen, sig);
        Quaternion q = test::random_quaternion(gen, sig);
        Quaternion r = test::random_quaternion(gen, sig);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + q) * r == p * r + q * r);
        Scalar k(test::random_rational(gen));
        CHECK((p * q).scaled(k) == p.scaled(k) * q);
        CHECK((p * q).scaled(k) == p * q.scaled(k));
    }
}

TEST_CASE("named constants") {
    LambdaSig sig = LambdaSig::symbolic();
    CHECK(named_constant(ConstName::Theta, sig) == q4(sig, 1, 2, 4, 8));
    CHECK(named_constant(ConstName::BinetA, sig) == q4(sig, 1, 2, -3, 1));
    CHECK(named_constant(ConstName::BinetB, sig) == q4(sig, 2, -3, 1, 2));
    CHECK(named_constant(ConstName::BinetC, sig) == q4(sig, 1, -2, 1, 1));
    CHECK(named_constant(ConstName::BinetD, sig) == q4(sig, -2, 1, 1, -2));

    Quaternion omega = named_constant(ConstName::Omega, sig);
    CHECK(omega.s().is_zero());
    CHECK(omega.c1() == sig.l3());
    CHECK(omega.c2() == sig.l2());
    CHECK(omega.c3() == sig.l1());

    Quaternion psi = named_constant(ConstName::Psi, sig);
    Poly3 psi_s = Poly3::constant(Rational(2)) + Poly3::monomial(Rational(6), {1, 1, 0}) +
                  Poly3::monomial(Rational(3), {1, 0, 1}) +
                  Poly3::monomial(Rational(-2), {0, 1, 1});
    CHECK(psi.s() == sym_poly(psi_s));
    CHECK(psi.c1() == Scalar::constant(Rational(1), RingMode::symbolic));
    CHECK(psi.c2() == Scalar::constant(Rational(-5), RingMode::symbolic));
    CHECK(psi.c3() == Scalar::constant(Rational(4), RingMode::symbolic));

    Quaternion phi = named_constant(ConstName::Phi, sig);
    Poly3 phi_s = Poly3::constant(Rational(-2)) + Poly3::monomial(Rational(2), {1, 1, 0}) +
                  Poly3::monomial(Rational(-1), {1, 0, 1}) +
                  Poly3::monomial(Rational(2), {0, 1, 1});
    CHECK(phi.s() == sym_poly(phi_s));
}

TEST_CASE("product identities for the Binet constants") {
    LambdaSig sig = LambdaSig::symbolic();
    Quaternion A = named_constant(ConstName::BinetA, sig);
    Quaternion B = named_constant(ConstName::BinetB, sig);
    Quaternion C = named_constant(ConstName::BinetC, sig);
    Quaternion D = named_constant(ConstName::BinetD, sig);
    Quaternion psi = named_constant(ConstName::Psi, sig);
    Quaternion phi = named_constant(ConstName::Phi, sig);
    Quaternion omega = named_constant(ConstName::Omega, sig);

    CHECK(B * A == psi + omega.scaled(Rational(7)));
    CHECK(A * B == psi - omega.scaled(Rational(7)));
    CHECK(D * C == phi + omega.scaled(Rational(3)));
    CHECK(C * D == phi - omega.scaled(Rational(3)));
    CHECK(B * A == A * B + omega.scaled(Rational(14)));
    CHECK(D * C == C * D + omega.scaled(Rational(6)));

    // bridge between the two shapes of the Cassini right side
    Quaternion xi = named_constant(ConstName::Xi, sig);
    CHECK(xi + omega.scaled(Rational(14)) == A * A + B * A + B * B);
    Quaternion xis = named_constant(ConstName::XiStar, sig);
    CHECK(xis == C * C + C * D + D * D);
}

TEST_CASE("sum example: A + 3B") {
    LambdaSig sig = LambdaSig::symbolic();
    Quaternion A = named_constant(ConstName::BinetA, sig);
    Quaternion B = named_constant(ConstName::BinetB, sig);
    CHECK(A + B.scaled(Rational(3)) == q4(sig, 7, -7, 0, 7));
}

TEST_CASE("special parameter triples") {
    LambdaSig ham = LambdaSig::hamilton();
    for (int i = 1; i <= 3; ++i) {
        Quaternion e = Quaternion::basis(ham, i);
        CHECK(e * e == -Quaternion::one(ham));
    }
    LambdaSig split = LambdaSig::split();
    Quaternion e3 = Quaternion::basis(split, 3);
    CHECK(e3 * e3 == Quaternion::one(split)); // e3^2 = +1
    LambdaSig semi = LambdaSig::semi();
    CHECK(Quaternion::basis(semi, 2) * Quaternion::basis(semi, 2) ==
          Quaternion::zero(semi));
    CHECK(Quaternion::basis(semi, 3) * Quaternion::basis(semi, 3) ==
          Quaternion::zero(semi));
    LambdaSig ss = LambdaSig::split_semi();
    CHECK(ss.l1() == Scalar(Rational(1)));
    CHECK(ss.l2() == Scalar(Rational(-1)));
    CHECK(ss.l3() == Scalar(Rational(0)));
    LambdaSig gen = LambdaSig::generalized(Rational(BigInt(2), BigInt(3)), Rational(-5));
    CHECK(gen.l1() == Scalar(Rational(1)));
}

} // TEST_SUITE
