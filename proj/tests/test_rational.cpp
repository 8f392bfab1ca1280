#include "quotgen/rational.hpp"

#include "doctest.h"
#include "quotgen/errors.hpp"

using quotgen::BigRat;
using quotgen::Errc;
using quotgen::Error;

TEST_CASE("construction and canonical form") {
  CHECK(BigRat(6, 4) == BigRat(3, 2));
  CHECK(BigRat(-6, 4) == BigRat(3, -2));
  CHECK(BigRat(0, 7).is_zero());
  CHECK(BigRat(5, 5).is_one());
  CHECK_THROWS_AS(BigRat(1, 0), Error);
}

TEST_CASE("arithmetic") {
  BigRat a(1, 2), b(1, 3);
  CHECK(a + b == BigRat(5, 6));
  CHECK(a - b == BigRat(1, 6));
  CHECK(a * b == BigRat(1, 6));
  CHECK(a / b == BigRat(3, 2));
  CHECK(-a == BigRat(-1, 2));
  CHECK(a.inv() == BigRat(2));
  CHECK_THROWS_AS(BigRat(0).inv(), Error);
  CHECK(BigRat(2, 3).pow(3) == BigRat(8, 27));
  CHECK(BigRat(2, 3).pow(-2) == BigRat(9, 4));
  CHECK(BigRat(7).pow(0).is_one());
}

TEST_CASE("ordering and predicates") {
  CHECK(BigRat(1, 3) < BigRat(1, 2));
  CHECK(BigRat(-1, 2) < BigRat(0));
  CHECK(BigRat(-3, 4).is_negative());
  CHECK(BigRat(4, 2).is_integer());
  CHECK(!BigRat(1, 2).is_integer());
  CHECK(BigRat(-7, 2).abs() == BigRat(7, 2));
}

TEST_CASE("string round trips") {
  CHECK(BigRat::from_string("22/7") == BigRat(22, 7));
  CHECK(BigRat::from_string("-5") == BigRat(-5));
  CHECK(BigRat(22, 7).encode() == "22/7");
  CHECK(BigRat(-3).encode() == "-3/1");
  CHECK(BigRat(-3).str() == "-3");
  CHECK(BigRat::from_string(BigRat(-987654321, 123456789).encode()) ==
        BigRat(-987654321, 123456789));
  CHECK_THROWS_AS(BigRat::from_string("x"), Error);
  CHECK_THROWS_AS(BigRat::from_string("1/0"), Error);
}

TEST_CASE("large values stay exact") {
  BigRat big = BigRat(1);
  for (int i = 1; i <= 40; ++i) big = big * BigRat(i);
  // 40! has 48 digits; exactness means dividing back down returns 1.
  BigRat back = big;
  for (int i = 1; i <= 40; ++i) back = back / BigRat(i);
  CHECK(back.is_one());
}

TEST_CASE("falling-factorial binomial") {
  using quotgen::binomial_falling;
  CHECK(binomial_falling(5, 2) == BigRat(10));
  CHECK(binomial_falling(5, 0) == BigRat(1));
  CHECK(binomial_falling(-2, 3) == BigRat(-4));   // (-2)(-3)(-4)/6
  CHECK(binomial_falling(-1, 2) == BigRat(1));    // (-1)(-2)/2
  CHECK(binomial_falling(3, 5) == BigRat(0));
}

TEST_CASE("lcm helper") {
  CHECK(quotgen::lcm_long(4, 6) == 12);
  CHECK(quotgen::lcm_long(1, 9) == 9);
  CHECK(quotgen::lcm_long(7, 7) == 7);
}
