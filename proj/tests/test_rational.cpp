#include <doctest.h>

#include <sstream>

#include "circflow/rational.hpp"

using circflow::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("normalization and accessors") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(5, 2) == Rational(-5, 2));
  CHECK(Rational(-7, 3).abs() == Rational(7, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("ordering") {
  CHECK(Rational(8, 3) < Rational(11, 4));
  CHECK(Rational(11, 4) < Rational(14, 5));
  CHECK(Rational(19, 7) > Rational(8, 3));
  CHECK(Rational(2) <= Rational(2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("parsing and printing") {
  CHECK(Rational::parse("11/4") == Rational(11, 4));
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK(Rational::parse("+5/4") == Rational(5, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse(" 3/2 ") == Rational(3, 2));
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK(Rational(5, 2).to_string() == "5/2");
  CHECK(Rational(5).to_string() == "5");
  CHECK(Rational(5).to_fraction_string() == "5/1");
  std::ostringstream os;
  os << Rational(-3, 7);
  CHECK(os.str() == "-3/7");
}

TEST_SUITE_END();
