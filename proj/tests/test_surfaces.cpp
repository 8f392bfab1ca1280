#include "quotgen/surfaces.hpp"

#include "doctest.h"
#include "quotgen/closedforms.hpp"

using namespace quotgen;

namespace {

YRat yr(std::initializer_list<long> cs) {
  std::vector<BigRat> v;
  for (long c : cs) v.emplace_back(c);
  return YRat(YPoly(std::move(v)));
}

Poly<YRat> qp(std::initializer_list<YRat> cs) { return Poly<YRat>(std::vector<YRat>(cs)); }

SurfaceSpec k3_spec() {
  SurfaceSpec s;
  s.kind = SurfaceKind::k3;
  s.chi = 2;
  return s;
}

SurfaceSpec gentype_spec(long k2, long chi) {
  SurfaceSpec s;
  s.kind = SurfaceKind::general_type;
  s.k2 = k2;
  s.chi = chi;
  return s;
}

SurfaceSpec elliptic_spec(long chi, long gC, std::vector<long> mults) {
  SurfaceSpec s;
  s.kind = SurfaceKind::elliptic;
  s.chi = chi;
  s.base_genus = gC;
  s.mults = std::move(mults);
  return s;
}

}  // namespace

TEST_CASE("Seiberg-Witten values of fiber classes") {
  // c = 0 contributes the single empty decomposition on any fibration.
  CHECK(sw_fiber(BigRat(0), 2, 0, {}).value == BigRat(1));
  CHECK(sw_fiber(BigRat(0), 1, 1, {2, 3}).value == BigRat(1));
  CHECK(sw_fiber(BigRat(0), 2, 0, {}).representable);

  // Elliptic K3: binom(0, 1) kills the fiber itself.
  CHECK(sw_fiber(BigRat(1), 2, 0, {}).value == BigRat(0));
  CHECK(sw_fiber(BigRat(1), 2, 0, {}).representable);

  // Rational elliptic surface: binom(-1, 2) = 1 under the falling factorial.
  CHECK(sw_fiber(BigRat(2), 1, 0, {}).value == BigRat(1));

  // One multiple fiber of multiplicity 2: the half fiber is the unique
  // representation of c = 1/2, and F = 2(F_1) + 0 has d = 1, a = 0.
  CHECK(sw_fiber(BigRat(1, 2), 1, 0, {2}).value == BigRat(1));
  CHECK(sw_fiber(BigRat(1), 1, 0, {2}).value == BigRat(1));
}

TEST_CASE("fiber classes outside the lattice are flagged") {
  CHECK_FALSE(sw_fiber(BigRat(1, 2), 2, 0, {}).representable);
  CHECK(sw_fiber(BigRat(1, 2), 2, 0, {}).value == BigRat(0));
  CHECK_FALSE(sw_fiber(BigRat(1, 2), 1, 0, {3}).representable);
  CHECK_FALSE(sw_fiber(BigRat(-1), 2, 0, {}).representable);

  const SWValue z = z_elliptic(2, BigRat(1, 2), 1, 0, {3});
  CHECK_FALSE(z.representable);
  CHECK(z.value == BigRat(0));
}

TEST_CASE("multiplicities below two are rejected") {
  CHECK_THROWS_AS((void)sw_fiber(BigRat(1), 1, 0, {1}), Error);
  CHECK_THROWS_AS((void)z_elliptic(1, BigRat(1), 1, 0, {2, 0}), Error);
}

TEST_CASE("fiber-class series of elliptic surfaces") {
  CHECK(z_elliptic(2, BigRat(1), 1, 0, {}).value == BigRat(2));
  CHECK(z_elliptic(1, BigRat(1), 2, 0, {}).value == BigRat(0));
  for (int N = 1; N <= 3; ++N) {
    CHECK(z_elliptic(N, BigRat(0), 1, 0, {}).value == BigRat(1));
    CHECK(z_elliptic(N, BigRat(0), 2, 1, {2, 3}).value == BigRat(1));
  }

  // Multiplicity 2, c = 1: decompositions (0,1), (1,0), (1/2,1/2).
  CHECK(z_elliptic(2, BigRat(1), 1, 0, {2}).value == BigRat(3));
}

TEST_CASE("z_elliptic is blind to the ordering of the multiple fibers") {
  const std::vector<long> a{2, 3};
  const std::vector<long> b{3, 2};
  for (long k = 0; k <= 8; ++k) {
    const BigRat c(k, 6);
    CHECK(z_elliptic(2, c, 1, 0, a).value == z_elliptic(2, c, 1, 0, b).value);
  }
}

TEST_CASE("punctual series is a power of ubar") {
  for (int N = 1; N <= 3; ++N) CHECK(z_punctual(N, 0) == QRatFun::one());

  QRatFun expect(Var::q, 0, qp({yr({1}), yr({-1, -1})}),
                 qp({yr({1}), yr({-1})}) * qp({yr({1}), yr({0, -1})}));
  CHECK(z_punctual(1, -1) == expect);

  CHECK(z_punctual(2, 1) == ubar(2));
  CHECK(z_punctual(2, -2) * ubar(2).pow(2) == QRatFun::one());

  CHECK_THROWS_AS((void)z_punctual(0, 1), Error);
}

TEST_CASE("canonical-multiple series on minimal general type") {
  // ell = N: the subset product is empty and only the prefactor survives.
  CHECK(z_gentype(1, 1, 1, 3).series == QRatFun::monomial(Var::q, -1, yr({-1})));
  CHECK(z_gentype(2, 2, 3, 1).series == QRatFun::monomial(Var::q, -6));

  // ell = 0 recovers the punctual series.
  for (long k2 = 1; k2 <= 2; ++k2) {
    const ZSeries z = z_gentype(1, 0, k2, 4);
    CHECK_FALSE(z.vanishing);
    CHECK(z.series == ubar(1).pow(k2));
  }

  SUBCASE("multiples outside 0..N vanish with a tag") {
    for (int ell : {-1, 3}) {
      const ZSeries z = z_gentype(2, ell, 1, 1);
      CHECK(z.vanishing);
      CHECK(z.series.is_zero());
      CHECK_FALSE(z.trace.empty());
    }
  }

  CHECK_THROWS_AS((void)z_gentype(1, 1, 0, 1), Error);
  CHECK_THROWS_AS((void)z_gentype(0, 0, 1, 1), Error);
}

TEST_CASE("blow-up transform") {
  CHECK(z_blowup(ubar(2), 2, 2) == QRatFun::monomial(Var::q, 2) * ubar(2));

  QRatFun expect(Var::q, 1, qp({yr({1, 1}), yr({-1, -1, -1, -1})}),
                 qp({yr({1}), yr({-1})}) * qp({yr({1}), yr({0, 0, -1})}));
  CHECK(z_blowup(QRatFun::one(), 2, 1) == expect);

  for (int N = 1; N <= 3; ++N)
    for (long k2 = -1; k2 <= 1; ++k2)
      CHECK(z_blowup(z_punctual(N, k2), N, 0) == z_punctual(N, k2 - 1));

  CHECK(z_blowup(ubar(1), 1, 2).is_zero());
  CHECK(z_blowup(ubar(1), 1, -1).is_zero());
}

TEST_CASE("assembly on k3 surfaces") {
  const ZSeries plain = assemble(k3_spec(), 2, ClassDescriptor::punctual());
  CHECK(plain.series == QRatFun::one());
  CHECK_FALSE(plain.vanishing);
  CHECK_FALSE(plain.trace.empty());

  SurfaceSpec blown = k3_spec();
  blown.blowups.push_back(BlowupStep{0});
  const ZSeries z = assemble(blown, 2, ClassDescriptor::punctual());
  CHECK(z.series == ubar(2).pow(-1));
  CHECK(z.trace.size() == 2);
}

TEST_CASE("assembly on minimal general type") {
  const ZSeries z = assemble(gentype_spec(1, 3), 1, ClassDescriptor::canonical(1));
  CHECK(z.series == QRatFun::monomial(Var::q, -1, yr({-1})));

  const ZSeries z0 = assemble(gentype_spec(2, 1), 2, ClassDescriptor::canonical(0));
  CHECK(z0.series == ubar(2).pow(2));
}

TEST_CASE("assembly on elliptic fibrations") {
  const SurfaceSpec s = elliptic_spec(1, 0, {});
  const ZSeries z = assemble(s, 2, ClassDescriptor::fiber(BigRat(1)));
  CHECK(z.series == QRatFun::constant(yr({2})));
  CHECK_FALSE(z.vanishing);

  const ZSeries bad = assemble(s, 2, ClassDescriptor::fiber(BigRat(1, 2)));
  CHECK(bad.vanishing);
  CHECK(bad.series.is_zero());

  const ZSeries pt = assemble(s, 2, ClassDescriptor::punctual());
  CHECK(pt.series == QRatFun::one());
}

TEST_CASE("assembly folds repeated blow-ups") {
  SurfaceSpec s;
  s.kind = SurfaceKind::abstract_surface;
  s.k2 = 1;
  s.blowups.push_back(BlowupStep{0});
  s.blowups.push_back(BlowupStep{0});
  for (int N = 1; N <= 3; ++N) {
    const ZSeries z = assemble(s, N, ClassDescriptor::punctual());
    CHECK(z.series == z_punctual(N, -1));
    CHECK(z.trace.size() == 3);
  }

  SurfaceSpec far = k3_spec();
  far.blowups.push_back(BlowupStep{5});
  const ZSeries gone = assemble(far, 2, ClassDescriptor::punctual());
  CHECK(gone.vanishing);
  CHECK(gone.series.is_zero());
}

TEST_CASE("assembly rejects unresolved geometry") {
  CHECK_THROWS_AS((void)assemble(k3_spec(), 2, ClassDescriptor::fiber(BigRat(1))), Error);
  CHECK_THROWS_AS((void)assemble(k3_spec(), 2, ClassDescriptor::canonical(1)), Error);
  CHECK_THROWS_AS((void)assemble(elliptic_spec(1, 0, {}), 1, ClassDescriptor::canonical(1)),
                  Error);

  const ZSeries z = assemble(k3_spec(), 2, ClassDescriptor::canonical(0));
  CHECK(z.series == QRatFun::one());

  SurfaceSpec wrong = k3_spec();
  wrong.k2 = 1;
  CHECK_THROWS_AS((void)assemble(wrong, 1, ClassDescriptor::punctual()), Error);
  CHECK_THROWS_AS((void)assemble(gentype_spec(0, 1), 1, ClassDescriptor::punctual()), Error);
  CHECK_THROWS_AS((void)assemble(k3_spec(), 0, ClassDescriptor::punctual()), Error);
}

TEST_CASE("assembled outputs specialize at y = 1") {
  SurfaceSpec blown = k3_spec();
  blown.blowups.push_back(BlowupStep{1});
  const ZSeries z = assemble(blown, 2, ClassDescriptor::punctual());
  CHECK_NOTHROW((void)z.series.eval_y1());

  const ZSeries g = assemble(gentype_spec(2, 1), 2, ClassDescriptor::canonical(1));
  CHECK_NOTHROW((void)g.series.eval_y1());
}
