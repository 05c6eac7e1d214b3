#include "doctest.h"
#include "wappell/rational.hpp"

#include <stdexcept>

using namespace wappell;

TEST_CASE("make_rat canonicalizes and rejects zero denominators") {
  CHECK(make_rat(2, 4) == make_rat(1, 2));
  CHECK(make_rat(-3, -6) == make_rat(1, 2));
  CHECK(make_rat(3, -6) == make_rat(-1, 2));
  CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rat accepts integers and fractions") {
  CHECK(parse_rat("3/4") == make_rat(3, 4));
  CHECK(parse_rat("-5") == Rat(-5));
  CHECK(parse_rat(" 7/2 ") == make_rat(7, 2));
  CHECK(parse_rat("-2/8") == make_rat(-1, 4));
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
}

TEST_CASE("rat_to_string renders canonical forms") {
  CHECK(rat_to_string(make_rat(3, 4)) == "3/4");
  CHECK(rat_to_string(Rat(-5)) == "-5");
  CHECK(rat_to_string(Rat(0)) == "0");
  CHECK(rat_to_string(make_rat(-1, 3)) == "-1/3");
}

TEST_CASE("rat_is_integer") {
  CHECK(rat_is_integer(Rat(7)));
  CHECK(rat_is_integer(make_rat(8, 4)));
  CHECK_FALSE(rat_is_integer(make_rat(1, 2)));
}

TEST_CASE("factorial and binomial coefficients") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(6) == 720);
  CHECK(factorial(20) == Int("2432902008176640000"));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(40, 20) == Int("137846528820"));
}

TEST_CASE("rising and falling factorials") {
  CHECK(rising_factorial(Rat(3), 3) == Rat(60));   // 3*4*5
  CHECK(rising_factorial(Rat(3), 0) == Rat(1));
  CHECK(falling_factorial(Rat(5), 2) == Rat(20));  // 5*4
  CHECK(rising_factorial(make_rat(-1, 3), 2) == make_rat(-2, 9));
}

TEST_CASE("rational powers including negative exponents") {
  CHECK(rat_pow(make_rat(2, 3), 2) == make_rat(4, 9));
  CHECK(rat_pow(make_rat(2, 3), -2) == make_rat(9, 4));
  CHECK(rat_pow(Rat(5), 0) == Rat(1));
  CHECK(rat_pow(Rat(0), 3) == Rat(0));
  CHECK_THROWS_AS(rat_pow(Rat(0), -1), std::invalid_argument);
}
