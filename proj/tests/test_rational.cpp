#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cocond/rational.hpp"

using cocond::parse_rational;
using cocond::frac;
using cocond::Rat;

TEST_CASE("parses integers, fractions and decimals exactly") {
  CHECK(parse_rational("3") == Rat(3));
  CHECK(parse_rational("1/2") == frac(1, 2));
  CHECK(parse_rational("4/6") == frac(2, 3));
  CHECK(parse_rational("0.25") == frac(1, 4));
  CHECK(parse_rational(".5") == frac(1, 2));
  CHECK(parse_rational("2.") == Rat(2));
  CHECK(parse_rational("0.1") == frac(1, 10));
  CHECK(parse_rational("-3/4") == frac(-3, 4));
  CHECK(parse_rational("+7") == Rat(7));
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("--1"), std::invalid_argument);
}

TEST_CASE("renders p/q, integers without denominator") {
  CHECK(cocond::to_string(frac(1, 2)) == "1/2");
  CHECK(cocond::to_string(frac(4, 6)) == "2/3");
  CHECK(cocond::to_string(Rat(5)) == "5");
  CHECK(cocond::to_string(Rat(0)) == "0");
  CHECK(cocond::to_string(frac(-3, 7)) == "-3/7");
}

TEST_CASE("unit interval check") {
  CHECK(cocond::in_unit_interval(Rat(0)));
  CHECK(cocond::in_unit_interval(Rat(1)));
  CHECK(cocond::in_unit_interval(frac(1, 3)));
  CHECK_FALSE(cocond::in_unit_interval(frac(-1, 5)));
  CHECK_FALSE(cocond::in_unit_interval(frac(7, 5)));
}
