#include "quotgen/pade.hpp"

#include "doctest.h"

using namespace quotgen;

namespace {

YRat yr(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
  std::vector<BigRat> n, d;
  for (long c : num) n.emplace_back(c);
  for (long c : den) d.emplace_back(c);
  return YRat(YPoly(std::move(n)), YPoly(std::move(d)));
}

Poly<YRat> qp(std::initializer_list<YRat> cs) { return Poly<YRat>(std::vector<YRat>(cs)); }

const QRatFun ONE = QRatFun::one();
const QRatFun Q = QRatFun::monomial(Var::q, 1);

}  // namespace

TEST_CASE("pade round-trips a rational function with y coefficients") {
  QRatFun f(Var::q, 0, qp({yr({1}), yr({0, -1})}), qp({yr({1}), yr({-1}), yr({0, -1})}));
  PadeResult r = pade_reconstruct(f.series(9), 1, 2);
  CHECK(r.fun == f);
  CHECK(r.den_degree == 2);
  CHECK(r.surplus_checked == 6);
  CHECK_FALSE(r.rank_deficient);
}

TEST_CASE("pade picks the minimal denominator degree") {
  QRatFun geo = ONE / (ONE - Q);
  PadeResult r = pade_reconstruct(geo.series(8), 0, 3);
  CHECK(r.fun == geo);
  CHECK(r.den_degree == 1);
  CHECK(r.surplus_checked == 7);

  // A polynomial needs no denominator at all.
  QRatFun p = ONE + Q * Q;
  PadeResult rp = pade_reconstruct(p.series(6), 2, 2);
  CHECK(rp.fun == p);
  CHECK(rp.den_degree == 0);
}

TEST_CASE("pade handles series with positive valuation") {
  QRatFun f = Q.pow(3) / (ONE - Q);
  PadeResult r = pade_reconstruct(f.series(8), 3, 1);
  CHECK(r.fun == f);
  CHECK(r.fun.shift() == 3);
  CHECK(r.den_degree == 1);
}

TEST_CASE("pade rejects impossible inputs") {
  // Truncated exponential: not a (1,1) rational function through order 4.
  std::vector<YRat> e = {yr({1}), yr({1}), yr({1}, {2}), yr({1}, {6}), yr({1}, {24})};
  CHECK_THROWS_AS((void)pade_reconstruct(QSeries<YRat>(Var::q, std::move(e)), 1, 1), Error);

  // Not enough coefficients for the requested degrees.
  QRatFun geo = ONE / (ONE - Q);
  CHECK_THROWS_AS((void)pade_reconstruct(geo.series(3), 1, 2), Error);
  CHECK_THROWS_AS((void)pade_reconstruct(geo.series(5), -1, 2), Error);
}

TEST_CASE("pade reconstructs the zero series") {
  PadeResult r = pade_reconstruct(QSeries<YRat>(Var::q, 5), 1, 2);
  CHECK(r.fun.is_zero());
  CHECK(r.den_degree == 0);
}
