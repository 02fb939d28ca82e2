#include "tjq/quat_sequences.hpp"

#include <doctest.h>

using namespace tjq;

namespace {

Quaternion q4(const LambdaSig& sig, int s, int c1, int c2, int c3) {
    return Quaternion::from_rationals(sig, Rational(s), Rational(c1), Rational(c2), Rational(c3));
}

} // namespace

TEST_SUITE("quat_sequences") {

TEST_CASE("definitional values") {
    LambdaSig sig = LambdaSig::symbolic();
    CHECK(jg(0, sig) == q4(sig, 0, 1, 1, 2));
    CHECK(jg(1, sig) == q4(sig, 1, 1, 2, 5));
    CHECK(jg(2, sig) == q4(sig, 1, 2, 5, 9));
    CHECK(jg(5, sig) == q4(sig, 9, 18, 37, 73));
    CHECK(kg(0, sig) == q4(sig, 3, 1, 3, 10));
    CHECK(kg(1, sig) == q4(sig, 1, 3, 10, 15));
}

TEST_CASE("JG(2) equals (8 Theta - A) / 7") {
    LambdaSig sig = LambdaSig::symbolic();
    Quaternion expanded = (named_constant(ConstName::Theta, sig).scaled(Rational(8)) -
                           named_constant(ConstName::BinetA, sig))
                              .scaled(Rational(BigInt(1), BigInt(7)));
    CHECK(expanded == jg(2, sig));
}

TEST_CASE("KG(-3) equals KG(0) - 7/8 Theta") {
    LambdaSig sig = LambdaSig::hamilton();
    Quaternion expected =
        kg(0, sig) - named_constant(ConstName::Theta, sig).scaled(Rational(BigInt(7), BigInt(8)));
    CHECK(kg(-3, sig) == expected);
}

TEST_CASE("coefficients do not depend on the parameter triple") {
    LambdaSig a = LambdaSig::point(Rational(1), Rational(0), Rational(0));
    CHECK(jg(2, a) == q4(a, 1, 2, 5, 9));
}

TEST_CASE("recurrence closure") {
    LambdaSig sig = LambdaSig::symbolic();
    for (Index n = -20; n <= 100; ++n) {
        CHECK(jg(n, sig) ==
              jg(n - 1, sig) + jg(n - 2, sig) + jg(n - 3, sig).scaled(Rational(2)));
        CHECK(kg(n, sig) ==
              kg(n - 1, sig) + kg(n - 2, sig) + kg(n - 3, sig).scaled(Rational(2)));
    }
}

TEST_CASE("both Binet paths agree with the definition") {
    LambdaSig sig = LambdaSig::symbolic();
    for (Index n = -20; n <= 100; ++n) {
        Quaternion dj = jg(n, sig);
        CHECK(jg_binet(n, sig) == dj);
        CHECK(jg_binet_cases(n, sig) == dj);
        Quaternion dk = kg(n, sig);
        CHECK(kg_binet(n, sig) == dk);
        CHECK(kg_binet_cases(n, sig) == dk);
    }
}

TEST_CASE("Binet closed-form spot values") {
    LambdaSig sig = LambdaSig::symbolic();
    Quaternion theta = named_constant(ConstName::Theta, sig);
    Quaternion A = named_constant(ConstName::BinetA, sig);
    Quaternion B = named_constant(ConstName::BinetB, sig);
    Quaternion C = named_constant(ConstName::BinetC, sig);
    Quaternion D = named_constant(ConstName::BinetD, sig);

    CHECK(jg_binet(0, sig) ==
          (theta.scaled(Rational(2)) - B).scaled(Rational(BigInt(1), BigInt(7))));
    CHECK(jg_binet(0, sig) == q4(sig, 0, 1, 1, 2));
    CHECK(kg_binet(1, sig) == theta.scaled(Rational(2)) + C + D);
    CHECK(kg_binet(1, sig) == q4(sig, 1, 3, 10, 15));
    CHECK(jg_binet(5, sig) == q4(sig, 9, 18, 37, 73));
}

TEST_CASE("generating function expansion") {
    LambdaSig sig = LambdaSig::symbolic();
    auto one = genfun_coeffs(QuatSeqKind::jg, sig, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == q4(sig, 0, 1, 1, 2));

    auto two = genfun_coeffs(QuatSeqKind::kg, sig, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == kg(0, sig));
    CHECK(two[1] == kg(1, sig));
    CHECK(two[1] - two[0] == q4(sig, -2, 2, 7, 5));

    auto ten = genfun_coeffs(QuatSeqKind::jg, sig, 10);
    for (Index n = 0; n < 10; ++n) CHECK(ten[static_cast<std::size_t>(n)] == jg(n, sig));

    auto cj = genfun_coeffs(QuatSeqKind::jg, sig, 64);
    auto ck = genfun_coeffs(QuatSeqKind::kg, sig, 64);
    for (Index n = 0; n < 64; ++n) {
        CHECK(cj[static_cast<std::size_t>(n)] == jg(n, sig));
        CHECK(ck[static_cast<std::size_t>(n)] == kg(n, sig));
    }

    CHECK_THROWS_AS(genfun_coeffs(QuatSeqKind::jg, sig, 0), std::invalid_argument);
}

TEST_CASE("helper quaternions of the product identities") {
    LambdaSig sig = LambdaSig::symbolic();
    Quaternion A = named_constant(ConstName::BinetA, sig);
    Quaternion B = named_constant(ConstName::BinetB, sig);

    CHECK(helper_y(0, 1, sig, BinetFamily::j) == -(A + B.scaled(Rational(3))));
    CHECK(helper_y(1, 1, sig, BinetFamily::j) == A.scaled(Rational(3)) + B.scaled(Rational(2)));

    // Y_n(1) = X(n) (2A - B) - X(n+1) (3B + A)
    for (Index n = 0; n <= 2; ++n) {
        Quaternion first = A.scaled(Rational(2)) - B;
        Quaternion second = B.scaled(Rational(3)) + A;
        Quaternion expected = first.scaled(Rational(x_cyclic(n))) -
                              second.scaled(Rational(x_cyclic(n + 1)));
        CHECK(helper_y(n, 1, sig, BinetFamily::j) == expected);
    }

    // Z(n) helper and its K-family version
    Quaternion C = named_constant(ConstName::BinetC, sig);
    Quaternion D = named_constant(ConstName::BinetD, sig);
    for (Index n = -5; n <= 5; ++n) {
        CHECK(helper_z(n, sig, BinetFamily::j) ==
              A.scaled(Rational(x_cyclic(n))) - B.scaled(Rational(x_cyclic(n + 1))));
        CHECK(helper_z(n, sig, BinetFamily::k) ==
              C.scaled(Rational(x_cyclic(n))) - D.scaled(Rational(x_cyclic(n + 1))));
        // Y reduces to a difference of shifted Z values
        for (Index a = -4; a <= 4; ++a) {
            Quaternion w = helper_z(n, sig, BinetFamily::j).scaled(pow2(a)) -
                           helper_z(n + a, sig, BinetFamily::j);
            CHECK(helper_y(n, a, sig, BinetFamily::j) == w);
        }
    }
}

TEST_CASE("the algebra is genuinely noncommutative on JG values") {
    LambdaSig ham = LambdaSig::hamilton();
    CHECK(jg(0, ham) * jg(1, ham) != jg(1, ham) * jg(0, ham));
}

TEST_CASE("K0 = 0 changes the definitional route only") {
    LambdaSig sig = LambdaSig::symbolic();
    const Rational zero(0);
    CHECK(kg(0, sig, zero) == q4(sig, 0, 1, 3, 4));
    CHECK(kg_binet(0, sig) == q4(sig, 3, 1, 3, 10)); // closed form unchanged
    CHECK(kg(0, sig, zero) != kg_binet(0, sig));
}

} // TEST_SUITE
