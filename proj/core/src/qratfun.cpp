#include "quotgen/qratfun.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace quotgen {

namespace {

const YPoly kYMinusOne = YPoly(std::vector<BigRat>{BigRat(-1), BigRat(1)});

// Multiplicity of (y - 1) as a divisor of every inner coefficient.
int mult_y1(const Poly<YPoly>& p) {
  int best = -1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    YPoly cur = c;
    int k = 0;
    while (true) {
      auto [q, r] = divrem(cur, kYMinusOne);
      if (!r.is_zero()) break;
      cur = std::move(q);
      ++k;
      if (best >= 0 && k >= best) break;
    }
    best = best < 0 ? k : std::min(best, k);
    if (best == 0) return 0;
  }
  return best < 0 ? 0 : best;
}

Poly<YPoly> strip_y1(const Poly<YPoly>& p, int m) {
  if (m == 0) return p;
  std::vector<YPoly> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    YPoly cur = c;
    for (int i = 0; i < m && !cur.is_zero(); ++i) cur = exact_div(cur, kYMinusOne);
    out.push_back(std::move(cur));
  }
  return Poly<YPoly>(std::move(out));
}

Poly<YRat> eval_inner_y1(const Poly<YPoly>& p) {
  std::vector<YRat> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(YRat(YPoly::constant(c.eval_c(BigRat(1)))));
  return Poly<YRat>(std::move(out));
}

std::string ypoly_plain_str(const YPoly& p, const char* vn) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = 0; e <= p.degree(); ++e) {
    const BigRat& c = p.coeff(e);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c.str();
    } else {
      if (!c.is_one()) os << c.str() << "*";
      os << vn;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace

std::string yrat_str(const YRat& r) {
  if (r.is_polynomial()) return ypoly_plain_str(r.num(), "y");
  return "(" + ypoly_plain_str(r.num(), "y") + ")/(" + ypoly_plain_str(r.den(), "y") + ")";
}

std::string qpoly_str(const Poly<YRat>& p, Var var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  const std::string vn = var_name(var);
  bool first = true;
  for (int e = 0; e <= p.degree(); ++e) {
    const YRat c = p.coeff(e);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << yrat_str(c);
    } else {
      if (!c.is_one()) os << "(" << yrat_str(c) << ")*";
      os << vn;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

QRatFun::QRatFun(Var var, long shift, Poly<YRat> num, Poly<YRat> den)
    : var_(var), shift_(shift), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void QRatFun::normalize() {
  if (den_.is_zero()) raise(Errc::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    shift_ = 0;
    den_ = Poly<YRat>::one();
    return;
  }
  if (!den_.is_one()) {
    Poly<YRat> g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  const int vn = num_.valuation();
  const int vd = den_.valuation();
  if (vn > 0) num_ = num_.unshifted(vn);
  if (vd > 0) den_ = den_.unshifted(vd);
  shift_ += vn - vd;
  const YRat c0 = den_.coeff(0);
  if (!c0.is_one()) {
    const YRat ci = c0.inv();
    num_.scale(ci);
    den_.scale(ci);
  }
}

QRatFun QRatFun::zero(Var var) { return QRatFun(var, 0, Poly<YRat>(), Poly<YRat>::one()); }
QRatFun QRatFun::one(Var var) { return constant(YRat::one(), var); }

QRatFun QRatFun::constant(const YRat& c, Var var) {
  return QRatFun(var, 0, Poly<YRat>::constant(c), Poly<YRat>::one());
}

QRatFun QRatFun::monomial(Var var, long e, const YRat& c) {
  return QRatFun(var, e, Poly<YRat>::constant(c), Poly<YRat>::one());
}

QRatFun QRatFun::operator-() const {
  QRatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

QRatFun operator+(const QRatFun& a, const QRatFun& b) {
  if (a.var_ != b.var_) raise(Errc::VariableMismatch, "adding rational functions in different variables");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long m = std::min(a.shift_, b.shift_);
  const Poly<YRat> na = a.num_.shifted(static_cast<int>(a.shift_ - m));
  const Poly<YRat> nb = b.num_.shifted(static_cast<int>(b.shift_ - m));
  return QRatFun(a.var_, m, na * b.den_ + nb * a.den_, a.den_ * b.den_);
}

QRatFun operator-(const QRatFun& a, const QRatFun& b) { return a + (-b); }

QRatFun operator*(const QRatFun& a, const QRatFun& b) {
  if (a.var_ != b.var_) raise(Errc::VariableMismatch, "multiplying rational functions in different variables");
  if (a.is_zero() || b.is_zero()) return QRatFun::zero(a.var_);
  return QRatFun(a.var_, a.shift_ + b.shift_, a.num_ * b.num_, a.den_ * b.den_);
}

QRatFun operator/(const QRatFun& a, const QRatFun& b) {
  if (b.is_zero()) raise(Errc::DivisionByZero, "rational function division by zero");
  return a * b.inv();
}

QRatFun QRatFun::inv() const {
  if (is_zero()) raise(Errc::DivisionByZero, "inverse of zero rational function");
  return QRatFun(var_, -shift_, den_, num_);
}

QRatFun QRatFun::pow(long e) const {
  if (e == 0) return QRatFun::one(var_);
  QRatFun base = e > 0 ? *this : inv();
  unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  QRatFun r = QRatFun::one(var_);
  while (true) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n == 0) break;
    base *= base;
  }
  return r;
}

QSeries<YRat> QRatFun::body_series(long T) const {
  if (T < 0) raise(Errc::InvalidArgument, "negative truncation order");
  std::vector<YRat> nc(static_cast<size_t>(T) + 1), dc(static_cast<size_t>(T) + 1);
  for (long i = 0; i <= T; ++i) {
    nc[static_cast<size_t>(i)] = num_.coeff(static_cast<int>(i));
    dc[static_cast<size_t>(i)] = den_.coeff(static_cast<int>(i));
  }
  QSeries<YRat> n(var_, std::move(nc)), d(var_, std::move(dc));
  return n * d.inverted();
}

QSeries<YRat> QRatFun::series(long T) const {
  if (shift_ < 0)
    raise(Errc::InvalidArgument, "series expansion of a Laurent element with negative shift");
  if (is_zero() || shift_ > T) return QSeries<YRat>(var_, T);
  QSeries<YRat> body = body_series(T - shift_);
  std::vector<YRat> out(static_cast<size_t>(T) + 1);
  for (long i = shift_; i <= T; ++i) out[static_cast<size_t>(i)] = body.coeff(i - shift_);
  return QSeries<YRat>(var_, std::move(out));
}

QRatFun QRatFun::eval_y1() const {
  if (is_zero()) return QRatFun::zero(var_);
  auto [pn, dn] = clear_denominators(num_);
  auto [pd, dd] = clear_denominators(den_);
  Poly<YPoly> nb = pn;
  nb.scale(dd);
  Poly<YPoly> db = pd;
  db.scale(dn);
  const int m = std::min(mult_y1(nb), mult_y1(db));
  nb = strip_y1(nb, m);
  db = strip_y1(db, m);
  Poly<YRat> de = eval_inner_y1(db);
  if (de.is_zero()) raise(Errc::PoleAtY1, "pole at y = 1");
  return QRatFun(var_, shift_, eval_inner_y1(nb), std::move(de));
}

QRatFun QRatFun::scaled_var(const YRat& c) const {
  if (c.is_zero()) raise(Errc::InvalidArgument, "variable rescaling by zero");
  if (is_zero()) return *this;
  auto rescale = [&c](const Poly<YRat>& p) {
    std::vector<YRat> out;
    out.reserve(p.coeffs().size());
    YRat ck = YRat::one();
    for (int e = 0; e <= p.degree(); ++e) {
      out.push_back(p.coeff(e) * ck);
      ck *= c;
    }
    return Poly<YRat>(std::move(out));
  };
  Poly<YRat> n = rescale(num_);
  n.scale(c.pow(shift_));
  return QRatFun(var_, shift_, std::move(n), rescale(den_));
}

std::string QRatFun::str() const {
  std::ostringstream os;
  if (shift_ != 0) os << var_name(var_) << "^" << shift_ << " * ";
  os << "(" << qpoly_str(num_, var_) << ")";
  if (!den_.is_one()) os << " / (" << qpoly_str(den_, var_) << ")";
  return os.str();
}

}  // namespace quotgen
