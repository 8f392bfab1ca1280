#pragma once

#include <string>

#include "quotgen/poly.hpp"
#include "quotgen/rational.hpp"

namespace quotgen {

// Bivariate polynomial in (y, z) over Q, stored z-major: the outer variable
// is z, each coefficient is a polynomial in y.
using BivPoly = Poly<YPoly>;

// Element of the field Q(y, z). Equivariant weights w_i enter localization
// formulas only through e^{w_i} := z^{v_i}, so every fixed-locus quantity is
// a WCoeff and the non-equivariant limit is exact evaluation at z = 1.
//
// Canonical form: numerator and denominator are coprime polynomials in
// Z[y, z] with coprime joint integer content, and the leading coefficient of
// the denominator (z-major, then y-major) is positive. Equality is
// structural.
class WCoeff {
 public:
  WCoeff() : num_(), den_(BivPoly::one()) {}
  explicit WCoeff(BivPoly num) : num_(std::move(num)), den_(BivPoly::one()) { normalize(); }
  WCoeff(BivPoly num, BivPoly den);

  static WCoeff from_int(long n) { return WCoeff(BivPoly::from_int(n)); }
  static WCoeff one() { return from_int(1); }
  // y and z as field elements; z_pow accepts negative exponents.
  static WCoeff y();
  static WCoeff z_pow(long a);
  static WCoeff from_ypoly(const YPoly& p);

  const BivPoly& num() const { return num_; }
  const BivPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  WCoeff operator-() const;
  friend WCoeff operator+(const WCoeff& a, const WCoeff& b);
  friend WCoeff operator-(const WCoeff& a, const WCoeff& b);
  friend WCoeff operator*(const WCoeff& a, const WCoeff& b);
  friend WCoeff operator/(const WCoeff& a, const WCoeff& b);
  WCoeff& operator+=(const WCoeff& o) { return *this = *this + o; }
  WCoeff& operator-=(const WCoeff& o) { return *this = *this - o; }
  WCoeff& operator*=(const WCoeff& o) { return *this = *this * o; }
  WCoeff& operator/=(const WCoeff& o) { return *this = *this / o; }

  WCoeff inv() const;
  WCoeff pow(long e) const;

  friend bool operator==(const WCoeff& a, const WCoeff& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const WCoeff& a, const WCoeff& b) { return !(a == b); }

  // The non-equivariant limit z -> 1. After reduction a pole at z = 1 is
  // equivalent to the denominator vanishing identically there.
  YRat limit_z1() const;
  bool regular_at_z1() const;

  std::string str() const;

 private:
  void normalize();

  BivPoly num_, den_;
};

// Exact product via Kronecker substitution: both factors are scaled to
// integer coefficients, packed into single GMP integers with slot widths
// wide enough that no convolution sum overflows, multiplied once, and
// unpacked. Falls back to the schoolbook product for small operands.
BivPoly cell_mul(const BivPoly& a, const BivPoly& b);

// Substitution z = 1 of a bivariate polynomial (sum of z-coefficients).
YPoly eval_z1(const BivPoly& p);

// Exact division of bivariate polynomials in the outer variable; raises
// when the division is not exact over Q[y].
BivPoly bivar_exact_div(const BivPoly& a, const BivPoly& b);

}  // namespace quotgen
