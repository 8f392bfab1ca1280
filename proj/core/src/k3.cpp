#include "quotgen/k3.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "quotgen/errors.hpp"
#include "quotgen/pade.hpp"

namespace quotgen {

LaurentTU LaurentTU::monomial(int te, int ue, BigRat v) {
  LaurentTU r;
  if (!v.is_zero()) r.c_[{te, ue}] = std::move(v);
  return r;
}

BigRat LaurentTU::coeff(int te, int ue) const {
  const auto it = c_.find({te, ue});
  return it == c_.end() ? BigRat(0) : it->second;
}

LaurentTU& LaurentTU::operator+=(const LaurentTU& o) {
  for (const auto& [e, v] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_.emplace(e, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  return *this;
}

LaurentTU& LaurentTU::operator-=(const LaurentTU& o) {
  for (const auto& [e, v] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_.emplace(e, -v);
    } else {
      it->second -= v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  return *this;
}

LaurentTU operator*(const LaurentTU& a, const LaurentTU& b) {
  LaurentTU r;
  for (const auto& [ea, va] : a.c_)
    for (const auto& [eb, vb] : b.c_) {
      const std::pair<int, int> e{ea.first + eb.first, ea.second + eb.second};
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        r.c_.emplace(e, va * vb);
      } else {
        it->second += va * vb;
      }
    }
  for (auto it = r.c_.begin(); it != r.c_.end();)
    it = it->second.is_zero() ? r.c_.erase(it) : std::next(it);
  return r;
}

LaurentTU LaurentTU::reversed() const {
  LaurentTU r;
  for (const auto& [e, v] : c_) r.c_.emplace(std::make_pair(-e.first, -e.second), v);
  return r;
}

std::string LaurentTU::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : c_) {
    if (!first) os << " + ";
    first = false;
    os << v.str();
    if (e.first != 0) os << "*t^" << e.first;
    if (e.second != 0) os << "*u^" << e.second;
  }
  return os.str();
}

namespace {

LaurentTU ltu_pow(const LaurentTU& m, long k) {
  LaurentTU r = LaurentTU::one();
  for (long i = 0; i < k; ++i) r = r * m;
  return r;
}

GradedQSeries gq_const(LaurentTU v, long order, BigRat qoff = BigRat(0)) {
  GradedQSeries s;
  s.qoff = std::move(qoff);
  s.c.assign(static_cast<size_t>(order) + 1, LaurentTU());
  s.c[0] = std::move(v);
  return s;
}

// (1 - q^n m)^e through q-order, for any integer e.
GradedQSeries binom_factor(long n, const LaurentTU& m, long e, long order) {
  GradedQSeries s = gq_const(LaurentTU::one(), order);
  for (long k = 1; n * k <= order; ++k) {
    BigRat b = binomial_falling(e, k);
    if (k % 2) b = -b;
    if (b.is_zero()) break;
    LaurentTU term = ltu_pow(m, k);
    LaurentTU scaled;
    for (const auto& [ex, v] : term.terms()) scaled += LaurentTU::monomial(ex.first, ex.second, v * b);
    s.c[static_cast<size_t>(n * k)] = std::move(scaled);
  }
  return s;
}

// The seven factors of the Kawai-Yoshioka product at level n, to the power
// sign (+1 for the denominator product, -1 for its inverse).
GradedQSeries ky_level(long n, int sign, long order) {
  struct Entry {
    int te, ue;
    long e;
  };
  static const Entry entries[] = {
      {0, 0, 18}, {0, 2, 1}, {0, -2, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, 1}, {-1, -1, 1},
  };
  GradedQSeries r = gq_const(LaurentTU::one(), order);
  for (const auto& en : entries) {
    const LaurentTU m = LaurentTU::monomial(en.te, en.ue, BigRat(1));
    r = gq_mul(r, binom_factor(n, m, sign * en.e, order));
  }
  return r;
}

GradedQSeries ky_product(int sign, long order) {
  GradedQSeries r = gq_const(LaurentTU::one(), order);
  for (long n = 1; n <= order; ++n) r = gq_mul(r, ky_level(n, sign, order));
  return r;
}

// prod (1-q^n)^e through q-order, as a graded series with offset qoff.
GradedQSeries eta_power(long e, long order, BigRat qoff) {
  GradedQSeries r = gq_const(LaurentTU::one(), order, std::move(qoff));
  const LaurentTU one = LaurentTU::one();
  for (long n = 1; n <= order; ++n) {
    GradedQSeries f = binom_factor(n, one, e, order);
    f.qoff = BigRat(0);
    r = gq_mul(r, f);
  }
  return r;
}

// Laurent coefficients of one theta factor: prod (1-q^n)(1-q^n a)(1-q^n/a)
// where a is the Laurent monomial with exponents (te, ue).
GradedQSeries theta_product(int te, int ue, long order) {
  GradedQSeries r = gq_const(LaurentTU::one(), order, BigRat(1, 8));
  for (long n = 1; n <= order; ++n) {
    r = gq_mul(r, binom_factor(n, LaurentTU::one(), 1, order));
    r = gq_mul(r, binom_factor(n, LaurentTU::monomial(te, ue, BigRat(1)), 1, order));
    r = gq_mul(r, binom_factor(n, LaurentTU::monomial(-te, -ue, BigRat(1)), 1, order));
  }
  return r;
}

void scale_series(GradedQSeries& s, const LaurentTU& m) {
  for (auto& c : s.c) c = c * m;
}

// Aligned coefficient comparison; fractional leftovers are a bookkeeping bug.
bool gq_equal(const GradedQSeries& a, const GradedQSeries& b) {
  if (a.thalf != b.thalf || a.uhalf != b.uhalf)
    raise(Errc::FractionalPowerResidue, "uncancelled half power of t or u");
  const BigRat d = b.qoff - a.qoff;
  if (!d.is_integer())
    raise(Errc::FractionalPowerResidue, "uncancelled fractional power of q");
  const long off = d.to_long();
  const long lo = std::min<long>(0, off);
  const long hi = std::max(a.order(), b.order() + off);
  for (long i = lo; i <= hi; ++i) {
    const long ia = i;
    const long ib = i - off;
    const LaurentTU ca = (ia >= 0 && ia <= a.order()) ? a.c[static_cast<size_t>(ia)] : LaurentTU();
    const LaurentTU cb = (ib >= 0 && ib <= b.order()) ? b.c[static_cast<size_t>(ib)] : LaurentTU();
    if (ia > a.order() || ib > b.order()) break;
    if (ca != cb) return false;
  }
  return true;
}

// YRat in the inner variable from a u-Laurent slice.
YRat slice_to_yrat(const std::map<int, BigRat>& slice) {
  if (slice.empty()) return YRat();
  const int lo = slice.begin()->first;
  const int hi = slice.rbegin()->first;
  const int base = std::min(lo, 0);
  std::vector<BigRat> num(static_cast<size_t>(hi - base) + 1);
  for (const auto& [e, v] : slice) num[static_cast<size_t>(e - base)] = v;
  YPoly np(std::move(num));
  if (base == 0) return YRat(std::move(np));
  return YRat(std::move(np), YPoly::monomial(BigRat(1), -base));
}

bool even_exponents_only(const YPoly& p) {
  for (int i = 1; i <= p.degree(); i += 2)
    if (!p.coeff(i).is_zero()) return false;
  return true;
}

YPoly halve_exponents(const YPoly& p) {
  std::vector<BigRat> out(static_cast<size_t>(p.degree() / 2) + 1);
  for (int i = 0; i <= p.degree(); i += 2) out[static_cast<size_t>(i / 2)] = p.coeff(i);
  return YPoly(std::move(out));
}

// Descends a coefficient from the u variable to y = u^2.
YRat u_to_y(const YRat& c) {
  if (!even_exponents_only(c.num()) || !even_exponents_only(c.den()))
    raise(Errc::OddHalfPower, "odd power of y^{1/2} in a y-series coefficient");
  return YRat(halve_exponents(c.num()), halve_exponents(c.den()));
}

const YRat& u_monomial(int e) {
  static const YRat u = YRat::x();
  static const YRat one = YRat::one();
  (void)one;
  return u;
}

}  // namespace

GradedQSeries gq_mul(const GradedQSeries& a, const GradedQSeries& b) {
  GradedQSeries r;
  r.qoff = a.qoff + b.qoff;
  const int th = a.thalf + b.thalf;
  const int uh = a.uhalf + b.uhalf;
  r.thalf = th & 1;
  r.uhalf = uh & 1;
  const long T = std::min(a.order(), b.order());
  r.c.assign(static_cast<size_t>(T) + 1, LaurentTU());
  for (long i = 0; i <= T; ++i) {
    if (a.c[static_cast<size_t>(i)].is_zero()) continue;
    for (long j = 0; i + j <= T; ++j)
      r.c[static_cast<size_t>(i + j)] +=
          a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(j)];
  }
  if (th >= 2 || uh >= 2) {
    const LaurentTU carry = LaurentTU::monomial(-(th >> 1), -(uh >> 1), BigRat(1));
    scale_series(r, carry);
  }
  return r;
}

ThetaDelta theta_delta_series(int G) {
  if (G < 1) raise(Errc::InvalidArgument, "expansion order must be at least 1");
  ThetaDelta td;
  td.delta = eta_power(24, G, BigRat(1));
  td.theta_d1 = eta_power(3, G, BigRat(1, 8));

  td.theta_y = theta_product(0, 2, G);
  scale_series(td.theta_y, LaurentTU::monomial(0, 1, BigRat(1)) - LaurentTU::monomial(0, -1, BigRat(1)));

  // theta(y^{1/2}/t): the prefactor is (u - t) / (tu)^{1/2}.
  td.theta_ut = theta_product(-1, 1, G);
  scale_series(td.theta_ut, LaurentTU::monomial(0, 1, BigRat(1)) - LaurentTU::monomial(1, 0, BigRat(1)));
  td.theta_ut.thalf = 1;
  td.theta_ut.uhalf = 1;

  // theta(t y^{1/2}): the prefactor is (tu - 1) / (tu)^{1/2}.
  td.theta_tu = theta_product(1, 1, G);
  scale_series(td.theta_tu, LaurentTU::monomial(1, 1, BigRat(1)) - LaurentTU::one());
  td.theta_tu.thalf = 1;
  td.theta_tu.uhalf = 1;
  return td;
}

bool ky_identity_check(int G) {
  if (G < 2) raise(Errc::InvalidArgument, "identity check needs order at least 2");
  const ThetaDelta td = theta_delta_series(G);

  GradedQSeries lhs = gq_mul(td.theta_d1, gq_mul(td.theta_d1, td.theta_d1));
  lhs = gq_mul(lhs, gq_const(LaurentTU::monomial(0, -1, BigRat(1)) - LaurentTU::monomial(0, 1, BigRat(1)), G));
  LaurentTU pre = LaurentTU::monomial(1, 0, BigRat(1)) + LaurentTU::monomial(-1, 0, BigRat(1)) -
                  LaurentTU::monomial(0, 1, BigRat(1)) - LaurentTU::monomial(0, -1, BigRat(1));
  lhs = gq_mul(lhs, gq_const(std::move(pre), G, BigRat(1)));
  lhs = gq_mul(lhs, ky_product(+1, G));

  GradedQSeries rhs = gq_mul(td.delta, td.theta_y);
  rhs = gq_mul(rhs, td.theta_ut);
  rhs = gq_mul(rhs, td.theta_tu);

  return gq_equal(lhs, rhs);
}

LaurentTU ky_product_coefficient(int g) {
  if (g < 0) raise(Errc::InvalidArgument, "genus must be nonnegative");
  if (g == 0) return LaurentTU::one();
  const GradedQSeries p = ky_product(-1, g);
  return p.c[static_cast<size_t>(g)];
}

QRatFun ky_coefficient(int g) {
  const LaurentTU p = ky_product_coefficient(g);
  // Numerator t u P(t, u); denominator (t + 1/t - u - 1/u) t u.
  const LaurentTU n = p * LaurentTU::monomial(1, 1, BigRat(1));
  int tlo = 0, thi = 0;
  bool first = true;
  for (const auto& [e, v] : n.terms()) {
    (void)v;
    tlo = first ? e.first : std::min(tlo, e.first);
    thi = first ? e.first : std::max(thi, e.first);
    first = false;
  }
  std::vector<std::map<int, BigRat>> slices(static_cast<size_t>(thi - tlo) + 1);
  for (const auto& [e, v] : n.terms()) slices[static_cast<size_t>(e.first - tlo)][e.second] = v;
  std::vector<YRat> num;
  num.reserve(slices.size());
  for (auto& s : slices) num.push_back(slice_to_yrat(s));

  const YRat u = u_monomial(1);
  const YRat one = YRat::one();
  std::vector<YRat> den{u, -(u * u + one), u};
  return QRatFun(Var::t, tlo, Poly<YRat>(std::move(num)), Poly<YRat>(std::move(den)));
}

QRatFun reduced_punctual(long Tmax) {
  if (Tmax < 3) raise(Errc::InvalidArgument, "expansion order must be at least 3");
  // A (3,2) Pade reconstruction with one surplus equation needs seven
  // t-coefficients, so the expansion never runs shorter than that.
  const long T = std::max<long>(Tmax, 7);
  const QSeries<YRat> s = ky_coefficient(1).series(T);

  const YRat u = YRat::x();
  QSeries<YRat> conv(Var::t, T);
  for (long nn = 1; nn <= T; ++nn) {
    const YRat& c = s.coeff(nn);
    if (c.is_zero()) continue;
    // t -> t u and the global factor u: the t^n coefficient gains u^{n+1}.
    conv.set_coeff(nn, u_to_y(c * u.pow(nn + 1)));
  }

  PadeResult pr = pade_reconstruct(conv, 3, 2);

  const YRat y = YRat::x();
  const Poly<YRat> num{std::vector<YRat>{YRat::one() * (y * BigRat(20) + y * y * BigRat(2) + YRat::one() * BigRat(2))}};
  const Poly<YRat> den{std::vector<YRat>{YRat::one(), -(y + YRat::one()), y}};
  const QRatFun closed(Var::t, 1, num, den);
  if (pr.fun != closed)
    raise(Errc::PadeMismatch, "reduced series disagrees with its closed form");
  return pr.fun;
}

QSeries<YRat> shift_convert(const QSeries<YRat>& s, int g, ShiftDirection dir) {
  if (g < 0) raise(Errc::InvalidArgument, "genus must be nonnegative");
  const YRat u = YRat::x();
  QSeries<YRat> out(s.var(), s.trunc());
  for (long n = 0; n <= s.trunc(); ++n) {
    const YRat& c = s.coeff(n);
    if (c.is_zero()) continue;
    if (n + g - 1 < 0)
      raise(Errc::InvalidArgument, "nonzero coefficient below the series support");
    const long e = n + 2 * g - 1;
    YRat v = dir == ShiftDirection::to_unshifted ? c * u.pow(e) : c * u.pow(-e);
    if (dir == ShiftDirection::to_unshifted &&
        (!even_exponents_only(v.num()) || !even_exponents_only(v.den())))
      raise(Errc::OddHalfPower, "unshifted coefficient has an odd power of y^{1/2}");
    out.set_coeff(n, std::move(v));
  }
  return out;
}

}  // namespace quotgen
