#include "quotgen/wcoeff.hpp"

#include <sstream>
#include <utility>

namespace quotgen {

namespace {

// Joint rational content of two bivariate polynomials; positive unless both
// are zero.
BigRat joint_content(const BivPoly& a, const BivPoly& b) {
  BigRat g;
  auto fold = [&g](const BivPoly& p) {
    for (const auto& cy : p.coeffs())
      for (const auto& c : cy.coeffs())
        if (!c.is_zero()) g = BigRat::rational_gcd(g, c);
  };
  fold(a);
  fold(b);
  return g;
}

std::string ypoly_str(const YPoly& p) {
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
      os << "y";
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::string bivpoly_str(const BivPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = 0; e <= p.degree(); ++e) {
    const YPoly& c = p.coeff(e);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << ypoly_str(c);
    } else {
      os << "(" << ypoly_str(c) << ")*z";
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace

BivPoly bivar_exact_div(const BivPoly& a, const BivPoly& b) {
  if (b.is_zero()) raise(Errc::DivisionByZero, "bivariate division by zero");
  if (a.is_zero()) return BivPoly();
  Poly<YRat> q = exact_div(lift_bivar(a), lift_bivar(b));
  std::vector<YPoly> out;
  out.reserve(static_cast<size_t>(q.degree() + 1));
  for (const auto& c : q.coeffs()) {
    if (!c.is_polynomial()) raise(Errc::InvalidArgument, "bivariate division not exact");
    out.push_back(c.num());
  }
  return BivPoly(std::move(out));
}

YPoly eval_z1(const BivPoly& p) {
  YPoly s;
  for (const auto& c : p.coeffs()) s += c;
  return s;
}

WCoeff::WCoeff(BivPoly num, BivPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void WCoeff::normalize() {
  if (den_.is_zero()) raise(Errc::DivisionByZero, "zero denominator in Q(y,z)");
  if (num_.is_zero()) {
    den_ = BivPoly::one();
    return;
  }
  BivPoly g = bivar_gcd_primitive(num_, den_);
  if (g.degree() > 0) {
    num_ = bivar_exact_div(num_, g);
    den_ = bivar_exact_div(den_, g);
  }
  YPoly cy = gcd_euclid(inner_content(num_), inner_content(den_));
  if (cy.degree() > 0) {
    num_ = inner_divide(num_, cy);
    den_ = inner_divide(den_, cy);
  }
  BigRat c = joint_content(num_, den_);
  if (den_.lead().lead().is_negative()) c = -c;
  if (!c.is_one()) {
    const YPoly ci = YPoly::constant(c.inv());
    num_.scale(ci);
    den_.scale(ci);
  }
}

WCoeff WCoeff::y() { return WCoeff(BivPoly::constant(YPoly::x())); }

WCoeff WCoeff::z_pow(long a) {
  BivPoly zp = BivPoly::monomial(YPoly::one(), static_cast<int>(a >= 0 ? a : -a));
  if (a >= 0) return WCoeff(std::move(zp));
  return WCoeff(BivPoly::one(), std::move(zp));
}

WCoeff WCoeff::from_ypoly(const YPoly& p) { return WCoeff(BivPoly::constant(p)); }

WCoeff WCoeff::operator-() const {
  WCoeff r = *this;
  r.num_.scale(YPoly::from_int(-1));
  return r;
}

WCoeff operator+(const WCoeff& a, const WCoeff& b) {
  return WCoeff(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

WCoeff operator-(const WCoeff& a, const WCoeff& b) {
  return WCoeff(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

WCoeff operator*(const WCoeff& a, const WCoeff& b) {
  return WCoeff(a.num_ * b.num_, a.den_ * b.den_);
}

WCoeff operator/(const WCoeff& a, const WCoeff& b) {
  if (b.is_zero()) raise(Errc::DivisionByZero, "division by zero in Q(y,z)");
  return WCoeff(a.num_ * b.den_, a.den_ * b.num_);
}

WCoeff WCoeff::inv() const {
  if (is_zero()) raise(Errc::DivisionByZero, "inverse of zero in Q(y,z)");
  return WCoeff(den_, num_);
}

WCoeff WCoeff::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  WCoeff result = WCoeff::one();
  WCoeff base = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (true) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n == 0) break;
    base *= base;
  }
  return result;
}

YRat WCoeff::limit_z1() const {
  YPoly dv = eval_z1(den_);
  if (dv.is_zero()) raise(Errc::PoleAtOne, "pole at z = 1: " + str());
  return YRat(eval_z1(num_)) / YRat(dv);
}

bool WCoeff::regular_at_z1() const { return !eval_z1(den_).is_zero(); }

std::string WCoeff::str() const {
  if (den_.is_one()) return bivpoly_str(num_);
  return "(" + bivpoly_str(num_) + ") / (" + bivpoly_str(den_) + ")";
}

}  // namespace quotgen
