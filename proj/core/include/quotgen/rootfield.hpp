#pragma once

#include <memory>
#include <string>
#include <vector>

#include "quotgen/cyclotomic.hpp"
#include "quotgen/qratfun.hpp"

namespace quotgen {

// Coefficient field for root-of-q computations: rational functions of q
// over Q(zeta_N)(y).
using RootCoef = PFrac<CyYRat>;

// The field Q(zeta_N)(y)(q)[s] / (s^N - q). Its elements carry the roots
// t_i = zeta^{i-1} s of s^N = q; symmetric expressions in the t_i land in
// the rational subfield and descend to honest functions of q and y.
struct RootCtx {
  int n;
  std::shared_ptr<const CycloCtx> cyc;  // null when n = 1
};

std::shared_ptr<const RootCtx> root_context(int n);

class RootElem {
 public:
  explicit RootElem(std::shared_ptr<const RootCtx> ctx);
  RootElem(std::shared_ptr<const RootCtx> ctx, std::vector<RootCoef> coords);

  static RootElem zero(const std::shared_ptr<const RootCtx>& ctx) { return RootElem(ctx); }
  static RootElem one(const std::shared_ptr<const RootCtx>& ctx);
  static RootElem constant(const std::shared_ptr<const RootCtx>& ctx, RootCoef c);
  static RootElem from_yrat(const std::shared_ptr<const RootCtx>& ctx, const YRat& v);
  static RootElem from_int(const std::shared_ptr<const RootCtx>& ctx, long v);
  // The root s itself, and the i-th root t_i = zeta^{i-1} s for 1 <= i <= N.
  static RootElem s(const std::shared_ptr<const RootCtx>& ctx);
  static RootElem t(const std::shared_ptr<const RootCtx>& ctx, int i);
  // q = s^N as a constant of the coefficient field.
  static RootElem q(const std::shared_ptr<const RootCtx>& ctx);

  const std::shared_ptr<const RootCtx>& ctx() const { return ctx_; }
  const std::vector<RootCoef>& coords() const { return c_; }

  bool is_zero() const;
  bool is_constant() const;

  RootElem operator-() const;
  friend RootElem operator+(const RootElem& a, const RootElem& b);
  friend RootElem operator-(const RootElem& a, const RootElem& b);
  friend RootElem operator*(const RootElem& a, const RootElem& b);
  friend RootElem operator/(const RootElem& a, const RootElem& b);
  RootElem& operator+=(const RootElem& o) { return *this = *this + o; }
  RootElem& operator-=(const RootElem& o) { return *this = *this - o; }
  RootElem& operator*=(const RootElem& o) { return *this = *this * o; }
  RootElem& operator/=(const RootElem& o) { return *this = *this / o; }

  // Galois conjugate s -> zeta^k s.
  RootElem conj(int k) const;

  RootElem inv() const;
  RootElem pow(long e) const;

  friend bool operator==(const RootElem& a, const RootElem& b);
  friend bool operator!=(const RootElem& a, const RootElem& b) { return !(a == b); }

  // Collapse to a rational function of q and y. Requires the element to be
  // free of s and of zeta; raises NotGaloisInvariant otherwise.
  QRatFun descend() const;

 private:
  void check_same_ctx(const RootElem& o) const;

  std::shared_ptr<const RootCtx> ctx_;
  std::vector<RootCoef> c_;  // coefficients of s^0 .. s^{N-1}
};

// Lifts of base-field values into the coefficient tower.
CyYRat cy_from_yrat(const YRat& v);
RootCoef rc_from_yrat(const YRat& v);

// Formal fraction of root elements. Arithmetic accumulates numerators and
// denominators without ever inverting in the root field, so coordinates
// stay polynomial; symmetric fractions descend at the end with a single
// rational-function reduction.
class RootFrac {
 public:
  RootFrac(RootElem num, RootElem den);
  static RootFrac from_elem(RootElem e);
  static RootFrac zero(const std::shared_ptr<const RootCtx>& ctx);
  static RootFrac one(const std::shared_ptr<const RootCtx>& ctx);

  const RootElem& num() const { return num_; }
  const RootElem& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RootFrac operator+(const RootFrac& a, const RootFrac& b);
  friend RootFrac operator-(const RootFrac& a, const RootFrac& b);
  friend RootFrac operator*(const RootFrac& a, const RootFrac& b);
  friend RootFrac operator/(const RootFrac& a, const RootFrac& b);
  RootFrac& operator+=(const RootFrac& o) { return *this = *this + o; }
  RootFrac& operator*=(const RootFrac& o) { return *this = *this * o; }

  RootFrac inv() const;
  RootFrac pow(long e) const;

  // num.descend() / den.descend(): defined exactly for fractions symmetric
  // in the roots and Galois-stable.
  QRatFun descend() const;

 private:
  RootElem num_, den_;
};

}  // namespace quotgen
