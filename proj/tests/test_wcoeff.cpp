#include "quotgen/wcoeff.hpp"

#include <random>

#include "doctest.h"

using namespace quotgen;

namespace {

YPoly ypoly(std::initializer_list<long> cs) {
  std::vector<BigRat> v;
  for (long c : cs) v.emplace_back(c);
  return YPoly(std::move(v));
}

const WCoeff Y = WCoeff::y();
const WCoeff Z = WCoeff::z_pow(1);
const WCoeff ONE = WCoeff::one();

}  // namespace

TEST_CASE("wcoeff construction and canonical form") {
  CHECK(WCoeff().is_zero());
  CHECK(WCoeff::from_int(1).is_one());
  CHECK(WCoeff::from_int(0) == WCoeff());

  // 2/4 reduces to coprime integer contents with positive denominator lead.
  WCoeff half = WCoeff::from_int(2) / WCoeff::from_int(4);
  CHECK(half.num() == BivPoly::from_int(1));
  CHECK(half.den() == BivPoly::from_int(2));

  WCoeff negden = ONE / (ONE - Z);
  CHECK(negden.den().lead().lead() > BigRat(0));
  CHECK(negden == -(ONE / (Z - ONE)));
}

TEST_CASE("wcoeff field arithmetic") {
  WCoeff a = (ONE - Y * Z) / (ONE - Z);
  WCoeff b = (ONE - Z) / (ONE - Y * Z);
  CHECK(a * b == ONE);
  CHECK(a.inv() == b);
  CHECK(a / a == ONE);
  CHECK(a - a == WCoeff());
  CHECK(a + (-a) == WCoeff());
  CHECK((a + b) * a == a * a + b * a);
  CHECK(Z.pow(-2) * Z.pow(5) == Z.pow(3));
  CHECK(Y.pow(3) == Y * Y * Y);
  CHECK_THROWS_AS((void)(a / WCoeff()), Error);
  CHECK_THROWS_AS((void)WCoeff().inv(), Error);
}

TEST_CASE("wcoeff reduction cancels common factors") {
  // (1 - y z)/(1 - z y) is literally 1.
  CHECK((ONE - Y * Z) / (ONE - Z * Y) == ONE);

  // (z - z^2)/(1 - z) reduces to z.
  WCoeff r = (Z - Z * Z) / (ONE - Z);
  CHECK(r == Z);

  // A genuinely bivariate cancellation: (1 - y^2 z^2)/(1 - y z) = 1 + y z.
  WCoeff s = (ONE - Y * Y * Z * Z) / (ONE - Y * Z);
  CHECK(s == ONE + Y * Z);

  // Common y-content is stripped: (y + y^2)/(y) = 1 + y.
  WCoeff t = (Y + Y * Y) / Y;
  CHECK(t == ONE + Y);
  CHECK(t.den().is_one());
}

TEST_CASE("limit z -> 1") {
  CHECK(((ONE - Y * Z) / (ONE - Z * Y)).limit_z1() == YRat(YPoly::one()));
  CHECK(((Z - Z * Z) / (ONE - Z)).limit_z1() == YRat(YPoly::one()));
  CHECK_THROWS_AS((void)((ONE - Y * Z) / (ONE - Z)).limit_z1(), Error);
  CHECK_FALSE(((ONE - Y * Z) / (ONE - Z)).regular_at_z1());
  CHECK(((ONE - Y * Z) / (ONE - Z * Y)).regular_at_z1());

  // Irreducible fraction whose numerator and denominator both evaluate to
  // 1 - y at z = 1: the limit is 1 without any cancellation.
  WCoeff w = (ONE - Y * Z * Z) / (ONE - Z * Y);
  CHECK(w.limit_z1() == YRat(YPoly::one()));

  // A fraction with a nontrivial y-rational limit.
  WCoeff u = (ONE - Y * Z) / (ONE + Z);
  YRat lim = u.limit_z1();
  CHECK(lim == YRat(ypoly({1, -1})) / YRat(ypoly({2})));
}

TEST_CASE("pow and equality are structural") {
  WCoeff a = (ONE - Y * Z) / (ONE - Z * Z);
  CHECK(a.pow(0) == ONE);
  CHECK(a.pow(2) == a * a);
  CHECK(a.pow(-1) == a.inv());
  CHECK(a.pow(-3) == (a * a * a).inv());
}

TEST_CASE("packed product agrees with the schoolbook product") {
  std::mt19937 rng(424242);
  auto random_poly = [&](int zdeg, int ydeg, int density_pct, long spread) {
    std::uniform_int_distribution<long> num(-spread, spread);
    std::uniform_int_distribution<long> den(1, 48);
    std::uniform_int_distribution<int> pct(0, 99);
    std::vector<YPoly> zc(static_cast<size_t>(zdeg) + 1);
    for (auto& yc : zc)
      for (int yi = 0; yi <= ydeg; ++yi)
        if (pct(rng) < density_pct) yc.set_coeff(yi, BigRat(num(rng), den(rng)));
    return BivPoly(std::move(zc));
  };

  // Sizes chosen to cross the packing threshold in both factors.
  for (int round = 0; round < 4; ++round) {
    BivPoly a = random_poly(60, 12, 70, 1000000);
    BivPoly b = random_poly(45, 9, 70, 1000000);
    CHECK(cell_mul(a, b) == a * b);
  }

  // Mixed sizes, sparse rows, and coefficients of wildly different scale.
  BivPoly a = random_poly(200, 6, 25, 4);
  BivPoly b = random_poly(3, 40, 90, 1000000000);
  CHECK(cell_mul(a, b) == a * b);
  CHECK(cell_mul(b, a) == a * b);

  CHECK(cell_mul(a, BivPoly()) == BivPoly());
  CHECK(cell_mul(BivPoly::one(), a) == a);
}
