#include "quotgen/localization.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "quotgen/combinat.hpp"

namespace quotgen {

namespace {

YPoly one_minus_y() {
  YPoly p;
  p.set_coeff(0, BigRat(1));
  p.set_coeff(1, BigRat(-1));
  return p;
}

std::vector<long> resolve_weights(int n, const std::vector<long>& w) {
  if (w.empty()) return default_weights(n);
  if (static_cast<int>(w.size()) != n)
    raise(Errc::InvalidArgument, "weight vector must have one entry per fixed point");
  std::set<long> seen(w.begin(), w.end());
  if (static_cast<int>(seen.size()) != n)
    raise(Errc::InvalidArgument, "tangent weights must be distinct");
  return w;
}

// Coefficients of the genus series X(x) = x (1 - y e^{-x}) / (1 - e^{-x})
// through x^T: (1-y) + (1+y)/2 x + (1-y)/12 x^2 + ...
std::vector<YPoly> xgenus_coeffs(int T) {
  // d[j] = (-1)^j / (j+1)!  is the series of (1 - e^{-x}) / x.
  std::vector<BigRat> d(static_cast<size_t>(T) + 1);
  BigRat fact(1);
  for (int j = 0; j <= T; ++j) {
    fact *= BigRat(j + 1);
    d[static_cast<size_t>(j)] = BigRat((j % 2) ? -1 : 1) / fact;
  }
  std::vector<BigRat> s(static_cast<size_t>(T) + 1);
  s[0] = BigRat(1);
  for (int k = 1; k <= T; ++k) {
    BigRat acc;
    for (int j = 1; j <= k; ++j) acc += d[static_cast<size_t>(j)] * s[static_cast<size_t>(k - j)];
    s[static_cast<size_t>(k)] = -acc;
  }
  // numerator 1 - y e^{-x}: constant term 1 - y, then -y (-1)^i / i!.
  std::vector<YPoly> num(static_cast<size_t>(T) + 1);
  num[0] = one_minus_y();
  fact = BigRat(1);
  for (int i = 1; i <= T; ++i) {
    fact *= BigRat(i);
    num[static_cast<size_t>(i)] = YPoly::monomial(BigRat((i % 2) ? 1 : -1) / fact, 1);
  }
  std::vector<YPoly> out(static_cast<size_t>(T) + 1);
  for (int k = 0; k <= T; ++k) {
    YPoly acc;
    for (int i = 0; i <= k; ++i) acc += num[static_cast<size_t>(i)] * s[static_cast<size_t>(k - i)];
    out[static_cast<size_t>(k)] = acc;
  }
  return out;
}

// ----- factored denominators for the coefficient-extraction engine -----
//
// Every locus denominator is a monomial in the atoms
//   A(c) = 1 - z^c,  B(c) = 1 - y z^c,  C(c) = y - z^c,
// so the non-equivariant limit divides out the (1 - z) content once, at the
// very end, and evaluates the rest at z = 1 (A -> c, B -> 1-y, C -> y-1).

struct FKey {
  int kind;  // 0: A, 1: B, 2: C
  long c;
  friend bool operator<(const FKey& a, const FKey& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.c < b.c;
  }
};
using FDen = std::map<FKey, int>;

BivPoly fkey_poly(const FKey& k) {
  BivPoly p;
  p.set_coeff(0, k.kind == 2 ? YPoly::monomial(BigRat(1), 1) : YPoly::one());
  p.set_coeff(static_cast<int>(k.c),
              k.kind == 1 ? YPoly::monomial(BigRat(-1), 1) : YPoly::from_int(-1));
  return p;
}

void den_accumulate(FDen& dst, const FDen& src, int mult = 1) {
  if (mult == 0) return;
  for (const auto& [k, e] : src) dst[k] += e * mult;
}

// Exact division by 1 - z in the outer variable; the quotient coefficients
// are the partial sums and the final sum is the remainder at z = 1.
BivPoly div_one_minus_z(const BivPoly& p) {
  if (p.is_zero()) return p;
  const auto& pc = p.coeffs();
  std::vector<YPoly> q(pc.size() - 1);
  YPoly carry;
  for (size_t k = 0; k + 1 < pc.size(); ++k) {
    carry += pc[k];
    q[k] = carry;
  }
  carry += pc.back();
  if (!carry.is_zero())
    raise(Errc::PoleAtOne, "fixed-locus sum has a pole in the non-equivariant limit");
  return BivPoly(std::move(q));
}

// Exact division of p by the atom poly, or nothing when not divisible.
// Each atom is (c0 - z^c) with c0 either 1, 1 (carry scaled by y), or y, so
// division is one linear recurrence in the z coefficients: c0 q_i = p_i +
// (carry of q_{i-c}), and exactness means the recurrence tail above deg q
// vanishes.
std::optional<BivPoly> try_div_atom(const BivPoly& p, const FKey& key) {
  if (p.is_zero()) return p;
  const int c = static_cast<int>(key.c);
  const int dp = p.degree();
  if (dp < c) return std::nullopt;
  const int dq = dp - c;
  auto carry_of = [&](const YPoly& prev) {
    return key.kind == 1 ? prev.shifted(1) : prev;  // B carries y * q_{i-c}
  };
  std::vector<YPoly> q(static_cast<size_t>(dq) + 1);
  for (int i = 0; i <= dq; ++i) {
    YPoly v = p.coeff(i);
    if (i >= c) v += carry_of(q[static_cast<size_t>(i - c)]);
    if (key.kind == 2) {  // y - z^c: the quotient coefficient is v / y
      if (!v.coeff(0).is_zero()) return std::nullopt;
      v = v.unshifted(1);
    }
    q[static_cast<size_t>(i)] = std::move(v);
  }
  for (int i = dq + 1; i <= dp; ++i) {
    YPoly rem = p.coeff(i);
    if (i >= c) rem += carry_of(q[static_cast<size_t>(i - c)]);
    if (!rem.is_zero()) return std::nullopt;
  }
  return BivPoly(std::move(q));
}

// Remove every atom power that divides the numerator exactly.
void strip_term(BivPoly& num, FDen& den) {
  for (auto it = den.begin(); it != den.end();) {
    int& e = it->second;
    while (e > 0) {
      auto q = try_div_atom(num, it->first);
      if (!q) break;
      num = std::move(*q);
      --e;
    }
    it = e == 0 ? den.erase(it) : std::next(it);
  }
}

YRat limit_z1_factored(BivPoly num, const FDen& den) {
  long strip = 0, ebc = 0, ec = 0;
  BigRat scal(1);
  for (const auto& [k, e] : den) {
    if (k.kind == 0) {
      strip += e;
      scal *= BigRat(k.c).pow(e);
    } else {
      ebc += e;
      if (k.kind == 2) ec += e;
    }
  }
  for (long m = 0; m < strip; ++m) num = div_one_minus_z(num);
  YPoly deny = one_minus_y().pow(static_cast<unsigned long>(ebc));
  deny.scale(scal * BigRat((ec % 2) ? -1 : 1));
  return YRat(eval_z1(num), deny);
}

// ----- univariate pieces (each Phi, and the single-point Psi factors) -----

using HVec = std::vector<BivPoly>;  // index is the h exponent, length T+1

HVec hv_one(int T) {
  HVec v(static_cast<size_t>(T) + 1);
  v[0] = BivPoly::one();
  return v;
}

HVec hv_mul(const HVec& a, const HVec& b, int T) {
  HVec r(static_cast<size_t>(T) + 1);
  for (int i = 0; i <= T; ++i) {
    const BivPoly& ai = a[static_cast<size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; i + j <= T; ++j) {
      const BivPoly& bj = b[static_cast<size_t>(j)];
      if (bj.is_zero()) continue;
      r[static_cast<size_t>(i + j)] += cell_mul(ai, bj);
    }
  }
  return r;
}

struct HSer {
  HVec c;
  FDen den;
};

HSer xgenus_uni(int eps, int T) {
  auto xc = xgenus_coeffs(T);
  HSer s;
  s.c.resize(static_cast<size_t>(T) + 1);
  for (int k = 0; k <= T; ++k) {
    YPoly v = xc[static_cast<size_t>(k)];
    if (eps < 0 && (k % 2)) v = -v;
    s.c[static_cast<size_t>(k)] = BivPoly::constant(v);
  }
  return s;
}

HVec hv_pow(const HVec& a, int m, int T) {
  HVec r = hv_one(T);
  for (int i = 0; i < m; ++i) r = hv_mul(r, a, T);
  return r;
}

// Constant and tail of one unit factor X(x)/x for x = eps*h + shift*w with
// shift != 0. In terms of Z = z^shift e^{eps h} the factor is
// (1 - y Z)/(1 - Z); a negative shift is normalized by z^|shift| e^{-eps h}
// so the atoms always carry positive z powers.
struct UnitParts {
  BivPoly n0, d0;
  HVec ntail, dtail;  // valuation 1 in h
  FKey dkey;
};

UnitParts unit_parts(long shift, int eps, int K) {
  const long b = shift > 0 ? shift : -shift;
  const int epsp = shift > 0 ? eps : -eps;
  UnitParts u;
  u.dkey = FKey{0, b};
  u.n0 = fkey_poly(shift > 0 ? FKey{1, b} : FKey{2, b});
  u.d0 = fkey_poly(u.dkey);
  const YPoly ns = shift > 0 ? YPoly::monomial(BigRat(-1), 1) : YPoly::from_int(-1);
  const YPoly ds = YPoly::from_int(-1);
  u.ntail.resize(static_cast<size_t>(K) + 1);
  u.dtail.resize(static_cast<size_t>(K) + 1);
  BigRat fact(1), epow(1);
  for (int k = 1; k <= K; ++k) {
    fact *= BigRat(k);
    epow *= BigRat(epsp);
    const BigRat ck = epow / fact;
    u.ntail[static_cast<size_t>(k)] = BivPoly::monomial(ns * ck, static_cast<int>(b));
    u.dtail[static_cast<size_t>(k)] = BivPoly::monomial(ds * ck, static_cast<int>(b));
  }
  return u;
}

// Numerator of ((n0 + ntail)/(d0 + dtail))^m through h^K over d0^{m+K}:
// the binomial expansion 1/(D0 + P)^m = sum_k (-1)^k binom(m-1+k, k) P^k
// D0^{-m-k} truncates at k = K since P has no constant term.
HVec unit_power_num(const UnitParts& u, int m, int K) {
  HVec nu(static_cast<size_t>(K) + 1);
  nu[0] = u.n0;
  for (int k = 1; k <= K; ++k) nu[static_cast<size_t>(k)] = u.ntail[static_cast<size_t>(k)];
  nu = hv_pow(nu, m, K);
  std::vector<BivPoly> d0pow(static_cast<size_t>(K) + 1);
  d0pow[0] = BivPoly::one();
  for (int k = 1; k <= K; ++k)
    d0pow[static_cast<size_t>(k)] = d0pow[static_cast<size_t>(k - 1)] * u.d0;
  HVec series(static_cast<size_t>(K) + 1), cur = hv_one(K);
  for (int k = 0; k <= K; ++k) {
    const BigRat coeff =
        binomial_falling(m - 1 + k, k) * BigRat((k % 2) ? -1 : 1);
    const BivPoly& dp = d0pow[static_cast<size_t>(K - k)];
    for (int i = k; i <= K; ++i) {
      const BivPoly& ci = cur[static_cast<size_t>(i)];
      if (ci.is_zero()) continue;
      BivPoly t = cell_mul(ci, dp);
      t.scale(YPoly::constant(coeff));
      series[static_cast<size_t>(i)] += t;
    }
    if (k < K) cur = hv_mul(cur, u.dtail, K);
  }
  return hv_mul(nu, series, K);
}

// One unit factor as a full series through h^T (the Psi building block).
HSer unit_uni(long shift, int eps, int T) {
  const UnitParts u = unit_parts(shift, eps, T);
  HSer out;
  out.c = unit_power_num(u, 1, T);
  out.den[u.dkey] = T + 1;
  return out;
}

// Phi_j^m through h^m. Coefficients beyond h^m never reach an extraction,
// so both the truncation order and the atom powers scale with m alone.
HSer phi_power(int N, int j, const std::vector<long>& w, int m) {
  HSer s;
  if (m == 0) {
    s.c = hv_one(0);
    return s;
  }
  s.c = hv_pow(xgenus_uni(-1, m).c, m, m);
  for (int k = 1; k <= N; ++k) {
    if (k == j) continue;
    const UnitParts u =
        unit_parts(w[static_cast<size_t>(k - 1)] - w[static_cast<size_t>(j - 1)], +1, m);
    s.c = hv_mul(s.c, unit_power_num(u, m, m), m);
    s.den[u.dkey] += 2 * m;
  }
  return s;
}

// ----- multivariate pieces (the cross terms of Psi) -----

using MPoly = MTrunc<BivPoly>;

struct MSer {
  MPoly num;
  FDen den;
};

MPoly lift_uni(const HVec& c, size_t var, const MCaps& caps) {
  MPoly m(caps);
  std::vector<int> e(caps.nvars(), 0);
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    e[var] = static_cast<int>(k);
    m.add_term(e, c[k]);
  }
  return m;
}

// num / (d0 + dtail) expanded as in unit_uni, with the total-degree cap
// playing the truncation role; the caller owns the resulting d0 atom power.
MPoly geometric_sum(const MPoly& num, const BivPoly& d0, const MPoly& dtail, const MCaps& caps) {
  const int K = caps.total;
  std::vector<BivPoly> d0pow(static_cast<size_t>(K) + 1);
  d0pow[0] = BivPoly::one();
  for (int k = 1; k <= K; ++k) d0pow[static_cast<size_t>(k)] = d0pow[static_cast<size_t>(k - 1)] * d0;
  MPoly series(caps);
  MPoly cur = MPoly::one(caps);
  const MPoly mneg = -dtail;
  for (int k = 0; k <= K; ++k) {
    MPoly term = cur;
    term.scale(d0pow[static_cast<size_t>(K - k)]);
    series += term;
    if (k < K) cur *= mneg;
  }
  return num * series;
}

// x/X(x) for x = h_{p1} - h_{p2} + shift*w with shift != 0: the reciprocal
// unit (1 - Z)/(1 - y Z) with Z = z^shift e^{-h_{p1} + h_{p2}}.
MSer invunit_pair(long shift, size_t p1, size_t p2, const MCaps& caps) {
  const long b = shift > 0 ? shift : -shift;
  const int s1 = shift > 0 ? -1 : +1;
  const int s2 = -s1;
  // tail = e^{s1 h_{p1} + s2 h_{p2}} - 1 over Q
  MPoly tail(caps);
  {
    std::vector<int> e(caps.nvars(), 0);
    BigRat f1(1);
    for (int a1 = 0; a1 <= caps.total; ++a1) {
      if (a1 > 0) f1 *= BigRat(a1);
      BigRat f2(1);
      for (int a2 = 0; a1 + a2 <= caps.total; ++a2) {
        if (a2 > 0) f2 *= BigRat(a2);
        if (a1 == 0 && a2 == 0) continue;
        BigRat c = BigRat((a1 % 2) && s1 < 0 ? -1 : 1) * BigRat((a2 % 2) && s2 < 0 ? -1 : 1);
        c /= f1 * f2;
        e[p1] = a1;
        e[p2] = a2;
        tail.add_term(e, BivPoly::constant(YPoly::constant(c)));
      }
    }
  }
  const BivPoly n0 = fkey_poly(FKey{0, b});
  const BivPoly d0 = shift > 0 ? fkey_poly(FKey{1, b}) : fkey_poly(FKey{2, b});
  const BivPoly nmul = BivPoly::monomial(YPoly::from_int(-1), static_cast<int>(b));
  const BivPoly dmul =
      shift > 0 ? BivPoly::monomial(YPoly::monomial(BigRat(-1), 1), static_cast<int>(b)) : nmul;
  MPoly num = MPoly::constant(caps, n0);
  {
    MPoly t = tail;
    t.scale(nmul);
    num += t;
  }
  MPoly dtail = tail;
  dtail.scale(dmul);
  MSer out{geometric_sum(num, d0, dtail, caps), {}};
  out.den[FKey{shift > 0 ? 1 : 2, b}] = caps.total + 1;
  return out;
}

// Everything needed to extract coefficients at one fixed locus: per-point
// Phi powers and the Psi series.
struct LocusData {
  std::vector<std::vector<HSer>> phipow;  // [p][m]: Phi_p^m through h^m
  MSer psi;
};

LocusData build_locus(int N, const std::vector<int>& J, const std::vector<long>& w, int T) {
  const size_t s = J.size();
  std::vector<std::vector<HSer>> phipow(s);
  for (size_t p = 0; p < s; ++p) {
    auto& pows = phipow[p];
    pows.reserve(static_cast<size_t>(T) + 1);
    for (int m = 0; m <= T; ++m) pows.push_back(phi_power(N, J[p], w, m));
  }
  const MCaps caps = uniform_caps(s, T);
  MSer psi{MPoly::one(caps), {}};
  for (size_t p = 0; p < s; ++p) {
    const int j = J[p];
    psi.num *= lift_uni(xgenus_uni(+1, T).c, p, caps);
    for (int k = 1; k <= N; ++k) {
      if (k == j) continue;
      const HSer u =
          unit_uni(w[static_cast<size_t>(j - 1)] - w[static_cast<size_t>(k - 1)], -1, T);
      psi.num *= lift_uni(u.c, p, caps);
      den_accumulate(psi.den, u.den);
    }
  }
  for (size_t p1 = 0; p1 < s; ++p1) {
    for (size_t p2 = 0; p2 < s; ++p2) {
      if (p1 == p2) continue;
      const long shift =
          w[static_cast<size_t>(J[p1] - 1)] - w[static_cast<size_t>(J[p2] - 1)];
      const MSer iu = invunit_pair(shift, p1, p2, caps);
      psi.num *= iu.num;
      den_accumulate(psi.den, iu.den);
    }
  }
  return LocusData{std::move(phipow), std::move(psi)};
}

// Numerator of [h^m] (prod_p Phi_p^{m_p} * Psi) over the merged denominator.
// The small Phi factors are multiplied together before they meet the large
// Psi coefficient.
BivPoly extract_term(const LocusData& L, const std::vector<int>& m) {
  const size_t s = m.size();
  BivPoly acc;
  for (const auto& [f, psic] : L.psi.num.terms()) {
    bool below = true;
    for (size_t p = 0; p < s && below; ++p) below = f[p] <= m[p];
    if (!below) continue;
    BivPoly prod = BivPoly::one();
    for (size_t p = 0; p < s && !prod.is_zero(); ++p)
      prod = cell_mul(prod, L.phipow[p][static_cast<size_t>(m[p])].c[static_cast<size_t>(m[p] - f[p])]);
    if (prod.is_zero()) continue;
    acc += cell_mul(psic, prod);
  }
  return acc;
}

}  // namespace

std::vector<long> default_weights(int n) {
  if (n < 0 || n > 62) raise(Errc::InvalidArgument, "weight count out of range");
  std::vector<long> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = (1L << i) - 1;
  return w;
}

MTrunc<WCoeff> xclass(const AffineArg& arg, const MCaps& caps) {
  if (arg.hcoeffs.size() != caps.nvars())
    raise(Errc::InvalidArgument, "h-part arity does not match the truncation box");
  if (arg.zshift == 0) {
    size_t nonzero = 0, pos = 0;
    for (size_t i = 0; i < arg.hcoeffs.size(); ++i) {
      if (arg.hcoeffs[i].is_zero()) continue;
      ++nonzero;
      pos = i;
    }
    if (nonzero == 0) return MTrunc<WCoeff>::constant(caps, WCoeff::from_ypoly(one_minus_y()));
    if (nonzero > 1)
      raise(Errc::InvalidArgument, "genus class with zero shift needs a single-variable h-part");
    const int kmax = std::min(caps.total, caps.per[pos]);
    const auto xc = xgenus_coeffs(kmax);
    MTrunc<WCoeff> r(caps);
    std::vector<int> e(caps.nvars(), 0);
    BigRat cpow(1);
    for (int k = 0; k <= kmax; ++k) {
      const YPoly v = xc[static_cast<size_t>(k)] * cpow;
      e[pos] = k;
      r.add_term(e, WCoeff::from_ypoly(v));
      cpow *= arg.hcoeffs[pos];
    }
    return r;
  }
  // (1 - y z^a e^{-hpart}) / (1 - z^a e^{-hpart})
  MTrunc<WCoeff> lin(caps);
  {
    std::vector<int> e(caps.nvars(), 0);
    for (size_t i = 0; i < arg.hcoeffs.size(); ++i) {
      if (arg.hcoeffs[i].is_zero()) continue;
      e[i] = 1;
      lin.add_term(e, WCoeff::from_ypoly(YPoly::constant(-arg.hcoeffs[i])));
      e[i] = 0;
    }
  }
  MTrunc<WCoeff> ze = lin.exp();
  ze.scale(WCoeff::z_pow(arg.zshift));
  MTrunc<WCoeff> yze = ze;
  yze.scale(WCoeff::y());
  const MTrunc<WCoeff> num = MTrunc<WCoeff>::one(caps) - yze;
  const MTrunc<WCoeff> den = MTrunc<WCoeff>::one(caps) - ze;
  return num * den.inverted();
}

IntegrandSpec IntegrandSpec::punctual(int N, std::vector<int> mbar, std::vector<long> weights) {
  IntegrandSpec sp;
  sp.N = N;
  for (int j = 1; j <= N; ++j) sp.J.push_back(j);
  sp.weights = std::move(weights);
  sp.mbar = std::move(mbar);
  return sp;
}

IntegrandSpec IntegrandSpec::gentype(int N, std::vector<int> J, std::vector<int> mbar,
                                     std::vector<long> weights) {
  IntegrandSpec sp;
  sp.N = N;
  sp.J = std::move(J);
  sp.weights = std::move(weights);
  sp.mbar = std::move(mbar);
  return sp;
}

MTrunc<WCoeff> build_integrand(const IntegrandSpec& spec) {
  if (spec.N < 1) raise(Errc::InvalidArgument, "integrand requires N >= 1");
  const int N = spec.N;
  const auto w = resolve_weights(N, spec.weights);
  const size_t s = spec.J.size();
  for (size_t p = 0; p < s; ++p) {
    if (spec.J[p] < 1 || spec.J[p] > N || (p > 0 && spec.J[p] <= spec.J[p - 1]))
      raise(Errc::InvalidArgument, "fixed-point subset must be ascending within 1..N");
  }
  if (spec.mbar.size() != s)
    raise(Errc::InvalidArgument, "per-variable caps must match the subset size");
  int total = 0;
  for (int mv : spec.mbar) {
    if (mv < 0) raise(Errc::InvalidArgument, "negative extraction cap");
    total += mv;
  }
  const MCaps caps{spec.mbar, total};
  auto zero_coeffs = [&] { return std::vector<BigRat>(caps.nvars()); };
  auto acc = MTrunc<WCoeff>::one(caps);
  for (size_t p = 0; p < s; ++p) {
    const int j = spec.J[p];
    AffineArg xa{zero_coeffs(), 0};
    xa.hcoeffs[p] = BigRat(-1);
    auto phi = xclass(xa, caps);
    for (int k = 1; k <= N; ++k) {
      if (k == j) continue;
      AffineArg ua{zero_coeffs(),
                   w[static_cast<size_t>(k - 1)] - w[static_cast<size_t>(j - 1)]};
      ua.hcoeffs[p] = BigRat(-1);
      phi *= xclass(ua, caps);
    }
    acc *= phi.pow(static_cast<unsigned long>(spec.mbar[p]));
    AffineArg pa{zero_coeffs(), 0};
    pa.hcoeffs[p] = BigRat(1);
    acc *= xclass(pa, caps);
    for (int k = 1; k <= N; ++k) {
      if (k == j) continue;
      AffineArg va{zero_coeffs(),
                   w[static_cast<size_t>(j - 1)] - w[static_cast<size_t>(k - 1)]};
      va.hcoeffs[p] = BigRat(1);
      acc *= xclass(va, caps);
    }
  }
  for (size_t p1 = 0; p1 < s; ++p1) {
    for (size_t p2 = 0; p2 < s; ++p2) {
      if (p1 == p2) continue;
      AffineArg ia{zero_coeffs(), w[static_cast<size_t>(spec.J[p1] - 1)] -
                                      w[static_cast<size_t>(spec.J[p2] - 1)]};
      ia.hcoeffs[p1] = BigRat(1);
      ia.hcoeffs[p2] = BigRat(-1);
      acc *= xclass(ia, caps).inverted();
    }
  }
  acc.scale(WCoeff::from_ypoly(one_minus_y()).pow(-static_cast<long>(s)));
  return acc;
}

OracleRequest OracleRequest::punctual(int N, long T, std::vector<long> weights) {
  OracleRequest r;
  r.kind = Kind::punctual;
  r.N = N;
  r.T = T;
  r.weights = std::move(weights);
  return r;
}

OracleRequest OracleRequest::gentype(int N, int ell, long T, std::vector<long> weights) {
  OracleRequest r;
  r.kind = Kind::gentype;
  r.N = N;
  r.ell = ell;
  r.T = T;
  r.weights = std::move(weights);
  return r;
}

QSeries<YRat> oracle_series(const OracleRequest& req) {
  if (req.N < 1) raise(Errc::InvalidArgument, "oracle requires N >= 1");
  if (req.T < 0) raise(Errc::InvalidArgument, "negative truncation order");
  const int N = req.N;
  const int T = static_cast<int>(req.T);
  const int ell = req.kind == OracleRequest::Kind::punctual ? 0 : req.ell;
  if (ell < 0 || ell > N) raise(Errc::InvalidArgument, "locus codimension out of range");
  const auto w = resolve_weights(N, req.weights);
  const int s = N - ell;

  // Every (subset, extraction-degree) pair contributes numerator/denominator
  // to its q-order; each order is summed over a common denominator before
  // the single z -> 1 limit, since only the sum is regular there.
  std::vector<std::vector<std::pair<BivPoly, FDen>>> terms(static_cast<size_t>(T) + 1);
  for (const auto& J : subsets_of_size(N, s)) {
    const LocusData L = build_locus(N, J, w, T);
    for (int n = 0; n <= T; ++n) {
      for (const auto& m : compositions_of(n, s)) {
        BivPoly num = extract_term(L, m);
        if (num.is_zero()) continue;
        FDen den = L.psi.den;
        for (size_t p = 0; p < static_cast<size_t>(s); ++p)
          den_accumulate(den, L.phipow[p][static_cast<size_t>(m[p])].den);
        strip_term(num, den);
        terms[static_cast<size_t>(n)].emplace_back(std::move(num), std::move(den));
      }
    }
  }

  const YRat prefac(YPoly::one(), one_minus_y().pow(static_cast<unsigned long>(s)));
  QSeries<YRat> out(Var::q, T);
  for (int n = 0; n <= T; ++n) {
    const auto& batch = terms[static_cast<size_t>(n)];
    FDen common;
    for (const auto& [num, den] : batch) {
      for (const auto& [k, e] : den) {
        auto it = common.find(k);
        if (it == common.end())
          common.emplace(k, e);
        else
          it->second = std::max(it->second, e);
      }
    }
    BivPoly total;
    for (const auto& [num, den] : batch) {
      BivPoly scale = BivPoly::one();
      for (const auto& [k, e] : common) {
        auto it = den.find(k);
        const int have = it == den.end() ? 0 : it->second;
        if (e > have) scale = cell_mul(scale, fkey_poly(k).pow(static_cast<unsigned long>(e - have)));
      }
      total += cell_mul(num, scale);
    }
    YRat val = limit_z1_factored(std::move(total), common);
    if (n % 2) val = -val;
    out.set_coeff(n, val * prefac);
  }
  return out;
}

WeightIndependenceReport weight_independence_check(const OracleRequest& base,
                                                   const std::vector<long>& alt_weights) {
  WeightIndependenceReport rep;
  try {
    const QSeries<YRat> s1 = oracle_series(base);
    OracleRequest alt = base;
    alt.weights = alt_weights;
    const QSeries<YRat> s2 = oracle_series(alt);
    for (long n = 0; n <= s1.trunc(); ++n) {
      if (s1.coeff(n) == s2.coeff(n)) continue;
      std::ostringstream os;
      os << "first difference at order " << n << ": " << yrat_str(s1.coeff(n)) << " vs "
         << yrat_str(s2.coeff(n));
      rep.detail = os.str();
      return rep;
    }
    rep.independent = true;
    std::ostringstream os;
    os << "series agree through order " << s1.trunc();
    rep.detail = os.str();
  } catch (const Error& e) {
    rep.independent = false;
    rep.detail = std::string("oracle failed: ") + e.what();
  }
  return rep;
}

}  // namespace quotgen
