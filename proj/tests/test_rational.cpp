#include "keller/rational.hpp"

#include <doctest.h>

using keller::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(Rational(7, 2) - Rational(1, 2) == Rational(3));
    CHECK(Rational(1, 2) / Rational(2) == Rational(1, 4));
    CHECK(-Rational(3, 4) == Rational(-3, 4));
    CHECK(Rational(2, 3).reciprocal() == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("rational string round trip") {
    CHECK(Rational::from_string("-3/2") == Rational(-3, 2));
    CHECK(Rational::from_string("14") == Rational(14));
    CHECK(Rational::from_string("+2/4") == Rational(1, 2));
    CHECK(Rational(-3, 2).to_string() == "-3/2");
    CHECK(Rational(5).to_string() == "5");
    CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
}

TEST_CASE("factorials") {
    CHECK(keller::factorial(0) == Rational(1));
    CHECK(keller::factorial(5) == Rational(120));
    CHECK(keller::factorial(12) == Rational(479001600));
}
