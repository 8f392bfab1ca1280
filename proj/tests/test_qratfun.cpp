#include "quotgen/qratfun.hpp"

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

TEST_CASE("qratfun canonical form") {
  // (q^2 + q^3) / (q + q^2) = q: gcd and valuations fold into the shift.
  QRatFun f(Var::q, 0, qp({yr({0}), yr({0}), yr({1}), yr({1})}), qp({yr({0}), yr({1}), yr({1})}));
  CHECK(f == Q);
  CHECK(f.shift() == 1);
  CHECK(f.num().is_one());
  CHECK(f.den().is_one());

  // Denominator constant term is normalized to 1.
  QRatFun g(Var::q, 0, qp({yr({1})}), qp({yr({2}), yr({-2})}));
  CHECK(g.den() == qp({yr({1}), yr({-1})}));
  CHECK(g.num() == qp({yr({1}, {2})}));

  // Unit y-factors cancel between numerator and denominator.
  QRatFun h(Var::q, 0, qp({yr({1, -1})}), qp({yr({1, -1}), yr({0, -1})}));
  CHECK(h.num() == qp({yr({1})}));
  CHECK(h.den() == qp({yr({1}), yr({0, 1}, {-1, 1})}));

  CHECK(QRatFun::zero().is_zero());
  CHECK(QRatFun::zero().shift() == 0);
  CHECK_THROWS_AS(QRatFun(Var::q, 0, qp({yr({1})}), Poly<YRat>()), Error);
}

TEST_CASE("qratfun field arithmetic") {
  QRatFun a = ONE / (ONE - Q);
  QRatFun b = Q / (ONE - Q);
  CHECK(a - b == ONE);
  CHECK(a * a.inv() == ONE);
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(-2) == (a * a).inv());
  CHECK((a + b) - b == a);
  CHECK(-(-a) == a);

  // Laurent monomials in q multiply through the shift.
  QRatFun qm1 = Q.inv();
  CHECK(qm1.shift() == -1);
  CHECK(qm1 * Q == ONE);
  CHECK(Q.pow(-3) * Q.pow(5) == Q * Q);

  QRatFun t = QRatFun::one(Var::t);
  CHECK_THROWS_AS((void)(t + ONE), Error);
}

TEST_CASE("qratfun series expansion") {
  QRatFun geo = ONE / (ONE - Q);
  QSeries<YRat> s = geo.series(5);
  CHECK(s.trunc() == 5);
  for (long n = 0; n <= 5; ++n) CHECK(s.coeff(n) == yr({1}));

  // q^2/(1-q)^2 has coefficient n-1 at q^n.
  QRatFun f = Q * Q / ((ONE - Q) * (ONE - Q));
  QSeries<YRat> fs = f.series(5);
  CHECK(fs.coeff(0) == YRat());
  CHECK(fs.coeff(1) == YRat());
  CHECK(fs.coeff(2) == yr({1}));
  CHECK(fs.coeff(5) == yr({4}));

  // A shift beyond the truncation order gives the zero series.
  CHECK(Q.pow(7).series(5) == QSeries<YRat>(Var::q, 5));
  CHECK_THROWS_AS((void)Q.inv().series(3), Error);

  // body_series ignores the monomial prefactor.
  CHECK(Q.pow(7).body_series(2).coeff(0) == yr({1}));
}

TEST_CASE("qratfun specialization y = 1") {
  // (1 - y q)/(1 - (1+y)q) at y = 1 is (1 - q)/(1 - 2q).
  QRatFun f(Var::q, 0, qp({yr({1}), yr({0, -1})}), qp({yr({1}), yr({-1, -1})}));
  QRatFun f1 = f.eval_y1();
  CHECK(f1 == QRatFun(Var::q, 0, qp({yr({1}), yr({-1})}), qp({yr({1}), yr({-2})})));

  // Common (1 - y) factors cancel: (1 + (1-y)q)/(1 - (1-y)q) -> 1.
  QRatFun g = (ONE + QRatFun::constant(yr({1, -1})) * Q) / (ONE - QRatFun::constant(yr({1, -1})) * Q);
  CHECK(g.eval_y1() == ONE);

  // An honest pole: 1/((1-y)(1-q)).
  QRatFun h = QRatFun::constant(yr({1}, {1, -1})) / (ONE - Q);
  CHECK_THROWS_AS((void)h.eval_y1(), Error);

  // Numerator vanishing at y = 1 gives zero.
  QRatFun k = QRatFun::constant(yr({1, 0, -1})) / (ONE - QRatFun::constant(yr({0, 1})) * Q);
  CHECK(k.eval_y1().is_zero());
}

TEST_CASE("qratfun variable rescaling") {
  QRatFun geo = ONE / (ONE - Q);
  QRatFun scaled = geo.scaled_var(yr({0, 1}));
  CHECK(scaled == ONE / (ONE - QRatFun::constant(yr({0, 1})) * Q));

  // The shift contributes c^shift.
  QRatFun m = Q * Q / (ONE - Q);
  QRatFun ms = m.scaled_var(yr({2}));
  CHECK(ms == QRatFun::constant(yr({4})) * Q * Q / (ONE - QRatFun::constant(yr({2})) * Q));
  CHECK_THROWS_AS((void)geo.scaled_var(YRat()), Error);
}
