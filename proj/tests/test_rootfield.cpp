#include "quotgen/rootfield.hpp"

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

}  // namespace

TEST_CASE("root powers fold to q") {
  for (int n = 1; n <= 4; ++n) {
    auto ctx = root_context(n);
    RootElem s = RootElem::s(ctx);
    CHECK(s.pow(n) == RootElem::q(ctx));
    CHECK(s.pow(2 * n) == RootElem::q(ctx) * RootElem::q(ctx));
  }
}

TEST_CASE("product of all roots") {
  // prod t_i = zeta^{N(N-1)/2} q: equals -q for N = 2 and q for N = 3.
  auto c2 = root_context(2);
  RootElem p2 = RootElem::t(c2, 1) * RootElem::t(c2, 2);
  CHECK(p2.descend() == -QRatFun::monomial(Var::q, 1));

  auto c3 = root_context(3);
  RootElem p3 = RootElem::t(c3, 1) * RootElem::t(c3, 2) * RootElem::t(c3, 3);
  CHECK(p3.descend() == QRatFun::monomial(Var::q, 1));
}

TEST_CASE("elementary symmetric functions descend") {
  auto ctx = root_context(3);
  RootElem e1 = RootElem::t(ctx, 1) + RootElem::t(ctx, 2) + RootElem::t(ctx, 3);
  CHECK(e1.is_constant());
  CHECK(e1.descend().is_zero());

  // prod (1 - t_i) = 1 - q for the roots of s^3 = q.
  RootElem one = RootElem::one(ctx);
  RootElem prod = one;
  for (int i = 1; i <= 3; ++i) prod *= one - RootElem::t(ctx, i);
  CHECK(prod.descend() == QRatFun(Var::q, 0, qp({yr({1}), yr({-1})}), Poly<YRat>::one()));
}

TEST_CASE("inversion in the root field") {
  auto ctx = root_context(2);
  RootElem one = RootElem::one(ctx);
  RootElem t1 = RootElem::t(ctx, 1);
  RootElem t2 = RootElem::t(ctx, 2);
  CHECK(t1 * t1.inv() == one);
  CHECK((one - t1) * (one - t1).inv() == one);

  // 1/(1 - sqrt(q)) + 1/(1 + sqrt(q)) = 2/(1 - q).
  RootElem sum = (one - t1).inv() + (one - t2).inv();
  QRatFun expect(Var::q, 0, qp({yr({2})}), qp({yr({1}), yr({-1})}));
  CHECK(sum.descend() == expect);

  CHECK_THROWS_AS((void)RootElem::zero(ctx).inv(), Error);
}

TEST_CASE("descent rejects irrational elements") {
  auto ctx = root_context(3);
  CHECK_THROWS_AS((void)RootElem::s(ctx).descend(), Error);

  // A constant coordinate that still involves zeta.
  RootElem z = RootElem::t(ctx, 2) * RootElem::t(ctx, 1).inv();
  CHECK(z.is_constant());
  CHECK_THROWS_AS((void)z.descend(), Error);
}

TEST_CASE("mixing root fields is rejected") {
  RootElem a = RootElem::one(root_context(2));
  RootElem b = RootElem::one(root_context(3));
  CHECK_THROWS_AS((void)(a + b), Error);
  CHECK_FALSE(a == b);
}

TEST_CASE("y coefficients thread through the tower") {
  auto ctx = root_context(2);
  // (1 - y t_1)(1 - y t_2) = 1 - y^2 q.
  RootElem one = RootElem::one(ctx);
  RootElem uy = RootElem::from_yrat(ctx, yr({0, 1}));
  RootElem prod = (one - uy * RootElem::t(ctx, 1)) * (one - uy * RootElem::t(ctx, 2));
  QRatFun expect(Var::q, 0, qp({yr({1}), yr({0, 0, -1})}), Poly<YRat>::one());
  CHECK(prod.descend() == expect);
}
