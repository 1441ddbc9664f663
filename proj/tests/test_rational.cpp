#include <doctest.h>

#include "condsym/rational.hpp"

using namespace condsym;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(1) / Rational(3)) == Rational(1, 3));
    CHECK((-Rational(2, 5)).num() == -2);
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(2).pow_int(10) == Rational(1024));
    CHECK(Rational(2).pow_int(-2) == Rational(1, 4));
    CHECK(Rational(0, 5).is_zero());
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(0).pow_int(-1));
}

TEST_CASE("rational ordering and gcd") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational::gcd(Rational(4, 3), Rational(2, 9)) == Rational(2, 9));
    CHECK(Rational::gcd(Rational(0), Rational(-5, 2)) == Rational(5, 2));
}

TEST_CASE("overflow is detected, not wrapped") {
    Rational big(1LL << 62);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}
