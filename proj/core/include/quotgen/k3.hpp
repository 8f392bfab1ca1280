#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quotgen/qratfun.hpp"
#include "quotgen/rational.hpp"
#include "quotgen/series.hpp"

namespace quotgen {

// Laurent polynomial in t and u with rational coefficients; u stands for
// y^{1/2} throughout this module.
class LaurentTU {
 public:
  LaurentTU() = default;

  static LaurentTU one() { return monomial(0, 0, BigRat(1)); }
  static LaurentTU monomial(int te, int ue, BigRat v);

  bool is_zero() const { return c_.empty(); }
  BigRat coeff(int te, int ue) const;

  // Exponent pairs (te, ue) of the nonzero terms, lexicographically sorted.
  const std::map<std::pair<int, int>, BigRat>& terms() const { return c_; }

  LaurentTU& operator+=(const LaurentTU& o);
  LaurentTU& operator-=(const LaurentTU& o);
  friend LaurentTU operator+(LaurentTU a, const LaurentTU& b) { return a += b; }
  friend LaurentTU operator-(LaurentTU a, const LaurentTU& b) { return a -= b; }
  friend LaurentTU operator*(const LaurentTU& a, const LaurentTU& b);
  friend bool operator==(const LaurentTU& a, const LaurentTU& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentTU& a, const LaurentTU& b) { return !(a == b); }

  // Simultaneous substitution t -> 1/t, u -> 1/u.
  LaurentTU reversed() const;

  std::string str() const;

 private:
  // Nonzero coefficients only, keyed by (t-exponent, u-exponent).
  std::map<std::pair<int, int>, BigRat> c_;
};

// Truncated q-series whose term i carries q^{qoff + i}; coefficients are
// Laurent in t, u. The flags record an extra factor t^{-thalf/2} u^{-uhalf/2}
// left over from a theta prefactor, so every stored exponent stays integral.
struct GradedQSeries {
  BigRat qoff;
  int thalf = 0;
  int uhalf = 0;
  std::vector<LaurentTU> c;

  long order() const { return static_cast<long>(c.size()) - 1; }
};

// Product truncated at the smaller operand order; q-offsets add, half-flags
// add modulo 2 with the carry folded into the Laurent coefficients.
GradedQSeries gq_mul(const GradedQSeries& a, const GradedQSeries& b);

struct ThetaDelta {
  GradedQSeries delta;     // q prod (1-q^n)^24
  GradedQSeries theta_y;   // theta(y):      q^{1/8} (u - 1/u) prod (1-q^n)(1-q^n u^2)(1-q^n u^-2)
  GradedQSeries theta_ut;  // theta(y^{1/2}/t)
  GradedQSeries theta_tu;  // theta(t y^{1/2})
  GradedQSeries theta_d1;  // theta'(1):     q^{1/8} prod (1-q^n)^3
};

// The modular factors of the Kawai-Yoshioka formula, expanded through
// q^{qoff + G}.
ThetaDelta theta_delta_series(int G);

// Verifies, through q-order G, that
//   (1/u - u) theta'(1)^3 / (Delta theta(u/t) theta(tu) theta(u^2))
// equals 1/((t + 1/t - u - 1/u) q) times the inverse product
//   prod_{n>0} (1-q^n)^{-18} (1-q^n u^2)^{-1} (1-q^n u^-2)^{-1}
//             (1-q^n u/t)^{-1} (1-q^n t/u)^{-1} (1-q^n tu)^{-1} (1-q^n/(tu))^{-1}
// by cross-multiplying both sides. All fractional exponents must cancel;
// a surviving one raises FractionalPowerResidue.
bool ky_identity_check(int G);

// Coefficient of q^g in the product above (without the 1/(t+1/t-u-1/u)
// prefactor). Invariant under (t,u) -> (1/t,1/u).
LaurentTU ky_product_coefficient(int g);

// The series of shifted reduced invariants of a primitive genus-g class:
// coefficient of q^g in prefactor times product, as a rational function in t.
// The inner variable of the returned function is u = y^{1/2}.
QRatFun ky_coefficient(int g);

// Generating series of reduced chi_{-y}-genera of the Hilbert scheme of
// points, derived from ky_coefficient(1): drop the t^0 term, substitute
// t -> t u, multiply by u, descend from u to y, and reconstruct the rational
// function from Tmax coefficients. The inner variable of the result is y.
QRatFun reduced_punctual(long Tmax);

enum class ShiftDirection { to_shifted, to_unshifted };

// Conversion between shifted and unshifted reduced invariants of a genus-g
// class: the coefficient of t^n scales by u^{+-(n+2g-1)}. Coefficients are
// read in the u variable; the unshifted side must have even u-exponents only
// and OddHalfPower reports a violation.
QSeries<YRat> shift_convert(const QSeries<YRat>& s, int g, ShiftDirection dir);

}  // namespace quotgen
