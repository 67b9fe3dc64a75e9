#include "doctest.h"
#include "qwp/rational.hpp"

using qwp::Rational;

TEST_SUITE("rational") {

TEST_CASE("canonical lowest terms with positive denominator") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(-2, -4).str() == "1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("exact arithmetic") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b).str() == "1/2");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/18");
  CHECK((a / b).str() == "2");
  CHECK((-a).str() == "-1/3");
  // (1/3 + 1/6) * 2 == 1 exactly
  CHECK(((a + b) * Rational(2)).is_one());
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("integer powers") {
  CHECK(Rational(2, 3).pow(3).str() == "8/27");
  CHECK(Rational(2, 3).pow(-2).str() == "9/4");
  CHECK(Rational(5).pow(0).is_one());
  CHECK(Rational(0).pow(5).is_zero());
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("string round-trip") {
  for (const char* s : {"0", "1", "-1", "22/7", "-355/113", "1000000000000000003"}) {
    CHECK(Rational::from_string(s).str() == s);
  }
  CHECK(Rational::from_string("+3/6").str() == "1/2");
  CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("a"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
}

TEST_CASE("no precision loss on large values") {
  // 2^200 as a rational, plus 1/3, times 3, minus 1: exact bookkeeping.
  Rational big = Rational(2).pow(200);
  Rational x = (big + Rational(1, 3)) * Rational(3) - Rational(1);
  CHECK(x == big * Rational(3));
}

}  // TEST_SUITE
