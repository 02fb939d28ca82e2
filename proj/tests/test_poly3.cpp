#include "tjq/poly3.hpp"
#include "tjq/scalar.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace tjq;

namespace {

Poly3 l(int i) { return Poly3::variable(i); }

} // namespace

TEST_SUITE("poly3") {

TEST_CASE("difference of squares") {
    Poly3 one = Poly3::constant(Rational(1));
    CHECK((l(0) + one) * (l(0) - one) == l(0) * l(0) - one);
}

TEST_CASE("two-term polynomial stays sparse and sorted") {
    Poly3 p = Poly3::monomial(Rational(6), {1, 1, 0}) + Poly3::monomial(Rational(3), {1, 0, 1});
    REQUIRE(p.terms().size() == 2);
    // lexicographic order: (1,0,1) before (1,1,0)
    auto it = p.terms().begin();
    CHECK(it->first == Exp3{1, 0, 1});
    CHECK(it->second == Rational(3));
    ++it;
    CHECK(it->first == Exp3{1, 1, 0});
    CHECK(it->second == Rational(6));
}

TEST_CASE("zero coefficients are never stored") {
    std::mt19937_64 gen(3);
    Poly3 p = test::random_poly(gen);
    Poly3 zero = p - p;
    CHECK(zero.is_zero());
    CHECK(zero.terms().empty());
    CHECK(zero == Poly3());
}

TEST_CASE("evaluation examples") {
    Poly3 product = l(0) * l(1) * l(2);
    CHECK(product.eval({Rational(1), Rational(1), Rational(1)}) == Rational(1));

    Poly3 l1l2 = l(0) * l(1);
    CHECK(l1l2.eval({Rational(1), Rational(1), Rational(-1)}) == Rational(1));

    // scalar part of Psi: 2 + 6 l1 l2 + 3 l1 l3 - 2 l2 l3 evaluates to 9 at (1,1,1)
    Poly3 psi_s = Poly3::constant(Rational(2)) + Poly3::monomial(Rational(6), {1, 1, 0}) +
                  Poly3::monomial(Rational(3), {1, 0, 1}) +
                  Poly3::monomial(Rational(-2), {0, 1, 1});
    CHECK(psi_s.eval({Rational(1), Rational(1), Rational(1)}) == Rational(9));
    // cross-check against the full product B*A at (1,1,1)
    LambdaSig ham = LambdaSig::hamilton();
    Quaternion ba = named_constant(ConstName::BinetB, ham) * named_constant(ConstName::BinetA, ham);
    CHECK(ba.s().rational() == Rational(9));
}

TEST_CASE("eval is a ring homomorphism") {
    std::mt19937_64 gen(11);
    for (int i = 0; i < 120; ++i) {
        Poly3 p = test::random_poly(gen);
        Poly3 q = test::random_poly(gen);
        std::array<Rational, 3> point = test::random_lambda(gen);
        CHECK((p * q).eval(point) == p.eval(point) * q.eval(point));
        CHECK((p + q).eval(point) == p.eval(point) + q.eval(point));
    }
}

TEST_CASE("ring axioms hold on random polynomials") {
    std::mt19937_64 gen(23);
    for (int i = 0; i < 80; ++i) {
        Poly3 a = test::random_poly(gen);
        Poly3 b = test::random_poly(gen);
        Poly3 c = test::random_poly(gen);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Poly3());
    }
}

TEST_CASE("printing") {
    Poly3 p = Poly3::constant(Rational(2)) + Poly3::monomial(Rational(6), {1, 1, 0}) +
              Poly3::monomial(Rational(-2), {0, 1, 1});
    CHECK(p.to_string() == "2 - 2*l2*l3 + 6*l1*l2");
    CHECK(Poly3().to_string() == "0");
    CHECK(l(2).to_string() == "l3");
}

} // TEST_SUITE

TEST_SUITE("scalar") {

TEST_CASE("rational mode arithmetic") {
    Scalar a = Scalar::constant(Rational(BigInt(1), BigInt(7)), RingMode::rational);
    Scalar b = Scalar::constant(Rational(BigInt(6), BigInt(7)), RingMode::rational);
    CHECK(a + b == Scalar::constant(Rational(1), RingMode::rational));
}

TEST_CASE("mixing ring modes is rejected") {
    Scalar r = Scalar::constant(Rational(1), RingMode::rational);
    Scalar s = Scalar::lambda_var(0);
    CHECK_THROWS_WITH_AS(r + s, "ring mode mismatch", std::domain_error);
    CHECK_THROWS_AS(r * s, std::domain_error);
    CHECK(r != s); // equality is a question, not an error
}

TEST_CASE("symbolic constants embed rationals") {
    Scalar c = Scalar::constant(Rational(BigInt(-3), BigInt(4)), RingMode::symbolic);
    CHECK(c.mode() == RingMode::symbolic);
    CHECK(c.poly().is_constant());
    CHECK(c.eval({Rational(9), Rational(9), Rational(9)}) == Rational(BigInt(-3), BigInt(4)));
}

TEST_CASE("accessors enforce the mode") {
    Scalar r = Scalar::constant(Rational(2), RingMode::rational);
    CHECK(r.rational() == Rational(2));
    CHECK_THROWS_AS(r.poly(), std::logic_error);
    Scalar s = Scalar::lambda_var(1);
    CHECK_THROWS_AS(s.rational(), std::logic_error);
}

} // TEST_SUITE
