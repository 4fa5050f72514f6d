#include <doctest.h>

#include "mdist/errors.hpp"
#include "mdist/rational.hpp"
#include "support/generators.hpp"

using mdist::Rational;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(-6, -3).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK_THROWS_AS(Rational(1, 0), mdist::DomainError);
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(7, 5) - Rational(2, 5) == Rational(1));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 3) / Rational(1, 6) == Rational(2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), mdist::DomainError);
  CHECK_THROWS_AS(Rational(0).inverse(), mdist::DomainError);
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(-1, 2) < Rational(0));
}

TEST_CASE("rational pow") {
  CHECK(Rational(1, 2).pow(3) == Rational(1, 8));
  CHECK(Rational(1, 2).pow(-2) == Rational(4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(0).pow(-1), mdist::DomainError);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse(" 0.5 ") == Rational(1, 2));
  CHECK(Rational::parse("2") == Rational(2));
  CHECK(Rational::parse("+7/5") == Rational(7, 5));
  CHECK(Rational::parse("0.3") == Rational(3, 10));
  CHECK_THROWS_AS(Rational::parse("1/0"), mdist::ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), mdist::ParseError);
  CHECK_THROWS_AS(Rational::parse(""), mdist::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), mdist::ParseError);
  CHECK_THROWS_AS(Rational::parse("--2"), mdist::ParseError);
}

TEST_CASE("rational decimal rendering") {
  CHECK(Rational(7, 5).decimal(2) == "1.40");
  CHECK(Rational(1, 3).decimal(3) == "0.333");
  CHECK(Rational(2, 3).decimal(2) == "0.67");
  CHECK(Rational(1, 8).decimal(2) == "0.13");  // ties away from zero
  CHECK(Rational(-1, 8).decimal(2) == "-0.13");
  CHECK(Rational(5).decimal(0) == "5");
  CHECK(Rational(1, 200).decimal(1) == "0.0");
}

TEST_CASE("rational str/parse round-trip") {
  mdist::testsupport::Rng rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const long num = static_cast<long>(rng.next() % 2001) - 1000;
    const long den = static_cast<long>(rng.next() % 999) + 1;
    const Rational r(num, den);
    CHECK(Rational::parse(r.str()) == r);
  }
}
