#include <catch2/catch_amalgamated.hpp>

#include "rd/rational.hpp"

using rd::Rational;

TEST_CASE("construction reduces to lowest terms") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(3, 2) - Rational(1, 2) == Rational(1));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  // a third cannot round-trip in floating point but does here
  Rational third(1, 3);
  Rational sum(0);
  for (int i = 0; i < 3; ++i) sum += third;
  CHECK(sum == Rational(1));
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 3) >= Rational(7, 3));
  CHECK(Rational(5, 2) > Rational(2));
}

TEST_CASE("floor") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(4).floor() == 4);
}

TEST_CASE("serialization") {
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(3).str() == "3/1");
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}
