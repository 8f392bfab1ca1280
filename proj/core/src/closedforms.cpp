#include "quotgen/closedforms.hpp"

#include <vector>

#include "quotgen/combinat.hpp"

namespace quotgen {

namespace {

YRat y_monomial(int e) { return YRat(YPoly::monomial(BigRat(1), e)); }

}  // namespace

QRatFun pn(int N) {
  if (N < 1) raise(Errc::InvalidArgument, "pn requires N >= 1");
  if (N == 1) return QRatFun::one();
  auto ctx = root_context(N);
  std::vector<RootElem> t;
  t.reserve(static_cast<size_t>(N));
  for (int i = 1; i <= N; ++i) t.push_back(RootElem::t(ctx, i));
  const RootElem one = RootElem::one(ctx);
  const RootElem y = RootElem::from_yrat(ctx, y_monomial(1));
  const RootElem onepy = one + y;
  RootElem prod = one;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      prod *= one - onepy * t[static_cast<size_t>(i)] + y * t[static_cast<size_t>(i)] * t[static_cast<size_t>(j)];
    }
  return prod.descend();
}

QRatFun ubar(int N) {
  if (N < 1) raise(Errc::InvalidArgument, "ubar requires N >= 1");
  const QRatFun p = pn(N);
  Poly<YRat> num = p.num();
  const Poly<YRat> oneminusq{std::vector<YRat>{YRat::one(), -YRat::one()}};
  const Poly<YRat> ynq{std::vector<YRat>{YRat::one(), -y_monomial(N)}};
  num = num * oneminusq * ynq;
  const YPoly onepy_n = YPoly(std::vector<BigRat>{BigRat(1), BigRat(1)}).pow(static_cast<unsigned long>(N));
  const Poly<YRat> denfac{std::vector<YRat>{YRat::one(), -YRat(onepy_n)}};
  return QRatFun(Var::q, 0, std::move(num), denfac.pow(static_cast<unsigned long>(N)));
}

RootFrac aj_term(const std::shared_ptr<const RootCtx>& ctx, const std::vector<int>& J) {
  const int N = ctx->n;
  const int s = static_cast<int>(J.size());
  const RootElem one = RootElem::one(ctx);
  if (s == 0) return RootFrac::one(ctx);
  const RootElem y = RootElem::from_yrat(ctx, y_monomial(1));
  const RootElem onepy = one + y;

  // Numerator and denominator are accumulated separately so the root-field
  // inversion happens once per subset.
  RootElem numer = one;
  RootElem denom = one;
  for (int j : J) {
    const RootElem tj = RootElem::t(ctx, j);
    numer *= tj * (one - onepy * tj).pow(N);
    denom *= (one - tj) * (one - y * tj);
  }
  for (int j1 : J)
    for (int j2 : J) {
      if (j1 == j2) continue;
      const RootElem t1 = RootElem::t(ctx, j1);
      const RootElem t2 = RootElem::t(ctx, j2);
      numer *= t2 - t1;
      denom *= one - onepy * t1 + y * t1 * t2;
    }
  // Prefactor (-1)^{s(N+1)} / (N^s q^s).
  const long sign = (static_cast<long>(s) * (N + 1)) % 2 == 0 ? 1 : -1;
  numer *= RootElem::from_int(ctx, sign);
  denom *= RootElem::from_int(ctx, N).pow(s) * RootElem::q(ctx).pow(s);
  return RootFrac(std::move(numer), std::move(denom));
}

QRatFun aj_power_sum(int N, int s, long e) {
  if (N < 1) raise(Errc::InvalidArgument, "aj_power_sum requires N >= 1");
  if (s < 0 || s > N) raise(Errc::InvalidArgument, "subset size out of range");
  auto ctx = root_context(N);
  RootFrac sum = RootFrac::zero(ctx);
  for (const auto& J : subsets_of_size(N, s)) sum += aj_term(ctx, J).pow(e);
  return sum.descend();
}

QRatFun bl(int N, int ell) {
  if (ell < 0 || ell > N) raise(Errc::InvalidArgument, "blow-up weight out of range");
  return aj_power_sum(N, N - ell, 1);
}

QRatFun g_series(int N, int ell, long g) {
  if (ell < 0 || ell > N) raise(Errc::InvalidArgument, "class weight out of range");
  return aj_power_sum(N, N - ell, 1 - g);
}

bool functional_equation_holds(const QRatFun& p, int N) {
  if (N < 1) raise(Errc::InvalidArgument, "functional equation requires N >= 1");
  if (p.shift() != 0 || !p.den().is_one()) return false;
  const int D = 2 * (N - 1);
  const int M = N * (N - 1);
  if (p.num().degree() > D) return false;
  for (int k = 0; k <= D; ++k) {
    const YRat ck = p.num().coeff(k);
    const YRat cd = p.num().coeff(D - k);
    if (!ck.is_polynomial() || !cd.is_polynomial()) return false;
    if (ck.num().degree() > M || cd.num().degree() > M) return false;
    if (cd.num() != ck.num().reversed_padded(M)) return false;
  }
  return true;
}

bool functional_equation_check(int N) { return functional_equation_holds(pn(N), N); }

}  // namespace quotgen
