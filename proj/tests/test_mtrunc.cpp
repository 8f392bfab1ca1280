#include "quotgen/mtrunc.hpp"

#include "doctest.h"
#include "quotgen/errors.hpp"
#include "quotgen/poly.hpp"
#include "quotgen/rational.hpp"

using quotgen::BigRat;
using quotgen::Error;
using quotgen::MCaps;
using quotgen::MTrunc;
using quotgen::uniform_caps;

using MT = MTrunc<BigRat>;

TEST_CASE("caps admit the right exponents") {
  MCaps caps{{2, 1}, 2};
  CHECK(caps.admits({2, 0}));
  CHECK(caps.admits({1, 1}));
  CHECK(!caps.admits({2, 1}));   // total 3 > 2
  CHECK(!caps.admits({0, 2}));   // second variable capped at 1
  CHECK(!caps.admits({-1, 0}));
}

TEST_CASE("monomial arithmetic under a cap box") {
  MCaps caps = uniform_caps(2, 3);
  MT x = MT::monomial(caps, BigRat(1), {1, 0});
  MT y = MT::monomial(caps, BigRat(1), {0, 1});
  MT s = x + y;
  CHECK(s.coeff({1, 0}) == BigRat(1));
  CHECK(s.coeff({0, 1}) == BigRat(1));
  MT p = s.pow(2);
  CHECK(p.coeff({2, 0}) == BigRat(1));
  CHECK(p.coeff({1, 1}) == BigRat(2));
  CHECK(p.coeff({0, 2}) == BigRat(1));
  // (x+y)^4 exceeds the total cap everywhere.
  CHECK(s.pow(4).is_zero());
  // Cancellation erases entries.
  CHECK((s - s).is_zero());
  CHECK((x * y).coeff({1, 1}) == BigRat(1));
}

TEST_CASE("box mismatch is rejected") {
  MT a = MT::one(uniform_caps(2, 3));
  MT b = MT::one(uniform_caps(2, 4));
  CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("exp of a linear form") {
  MCaps caps = uniform_caps(2, 3);
  MT x = MT::monomial(caps, BigRat(1), {1, 0});
  MT my = MT::monomial(caps, BigRat(-1), {0, 1});
  MT e = (x + my).exp();  // exp(h1 - h2)
  CHECK(e.coeff({0, 0}) == BigRat(1));
  CHECK(e.coeff({1, 0}) == BigRat(1));
  CHECK(e.coeff({0, 1}) == BigRat(-1));
  CHECK(e.coeff({1, 1}) == BigRat(-1));      // 1/(1!1!) * (-1)
  CHECK(e.coeff({2, 1}) == BigRat(-1, 2));   // 1/(2!1!) * (-1)
  CHECK(e.coeff({0, 3}) == BigRat(-1, 6));
  CHECK_THROWS_AS(MT::one(caps).exp(), Error);
  // exp(u) * exp(-u) = 1
  MT back = e * (my + x).scale(BigRat(-1)).exp();
  CHECK(back == MT::one(caps));
}

TEST_CASE("inverse of a unit") {
  MCaps caps = uniform_caps(2, 4);
  MT x = MT::monomial(caps, BigRat(1), {1, 0});
  MT u = MT::constant(caps, BigRat(2)) + x;  // 2 + h1
  MT inv = u.inverted();
  CHECK(inv.coeff({0, 0}) == BigRat(1, 2));
  CHECK(inv.coeff({1, 0}) == BigRat(-1, 4));
  CHECK(inv.coeff({4, 0}) == BigRat(1, 32));
  CHECK(u * inv == MT::one(caps));
  CHECK_THROWS_AS(x.inverted(), Error);
}

TEST_CASE("coefficients may live in a polynomial ring") {
  using quotgen::Poly;
  using YP = Poly<BigRat>;
  MCaps caps = uniform_caps(1, 2);
  MTrunc<YP> a = MTrunc<YP>::monomial(caps, YP({BigRat(1), BigRat(1)}), {1});
  MTrunc<YP> b = a * a;
  CHECK(b.coeff({2}) == YP({BigRat(1), BigRat(2), BigRat(1)}));
}
