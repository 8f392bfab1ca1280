#pragma once

#include <string>

#include "quotgen/poly.hpp"
#include "quotgen/rational.hpp"
#include "quotgen/series.hpp"

namespace quotgen {

// Rational function in one series variable (q or t) with coefficients in
// Q(y), carried as var^shift * num / den.
//
// Canonical form: num and den are coprime polynomials over Q(y), both with
// nonzero constant term (their valuations are folded into the monomial
// shift), and den(0) = 1. The zero function has shift 0, num 0, den 1.
// Equality is structural, so two equal values encode identically.
class QRatFun {
 public:
  QRatFun() : var_(Var::q), shift_(0), num_(), den_(Poly<YRat>::one()) {}
  QRatFun(Var var, long shift, Poly<YRat> num, Poly<YRat> den);

  static QRatFun zero(Var var = Var::q);
  static QRatFun one(Var var = Var::q);
  static QRatFun constant(const YRat& c, Var var = Var::q);
  static QRatFun monomial(Var var, long e, const YRat& c = YRat::one());

  Var var() const { return var_; }
  long shift() const { return shift_; }
  const Poly<YRat>& num() const { return num_; }
  const Poly<YRat>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return shift_ >= 0 && den_.is_one(); }

  QRatFun operator-() const;
  friend QRatFun operator+(const QRatFun& a, const QRatFun& b);
  friend QRatFun operator-(const QRatFun& a, const QRatFun& b);
  friend QRatFun operator*(const QRatFun& a, const QRatFun& b);
  friend QRatFun operator/(const QRatFun& a, const QRatFun& b);
  QRatFun& operator+=(const QRatFun& o) { return *this = *this + o; }
  QRatFun& operator-=(const QRatFun& o) { return *this = *this - o; }
  QRatFun& operator*=(const QRatFun& o) { return *this = *this * o; }
  QRatFun& operator/=(const QRatFun& o) { return *this = *this / o; }

  QRatFun inv() const;
  QRatFun pow(long e) const;

  friend bool operator==(const QRatFun& a, const QRatFun& b) {
    return a.var_ == b.var_ && a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRatFun& a, const QRatFun& b) { return !(a == b); }

  // Power series expansion through order T inclusive; requires shift >= 0
  // (the expansion of num/den times var^shift).
  QSeries<YRat> series(long T) const;
  // Expansion of num/den alone, ignoring the monomial shift.
  QSeries<YRat> body_series(long T) const;

  // Specialization y = 1, exact: common powers of (1 - y) are cancelled
  // between numerator and denominator before evaluating. Raises PoleAtY1
  // when the denominator still vanishes identically at y = 1.
  QRatFun eval_y1() const;

  // f(c * var) for a nonzero constant c of the coefficient field.
  QRatFun scaled_var(const YRat& c) const;

  std::string str() const;

 private:
  void normalize();

  Var var_;
  long shift_;
  Poly<YRat> num_, den_;
};

std::string yrat_str(const YRat& r);
std::string qpoly_str(const Poly<YRat>& p, Var var);

}  // namespace quotgen
