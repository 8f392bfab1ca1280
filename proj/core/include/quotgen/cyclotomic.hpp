#pragma once

#include <memory>
#include <string>

#include "quotgen/poly.hpp"
#include "quotgen/rational.hpp"

namespace quotgen {

// The field Q(zeta_N), presented as Q[x] modulo the N-th cyclotomic
// polynomial. Contexts are obtained from cyclo_context() below, which caches
// one instance per N so that pointer identity implies field identity.
struct CycloCtx {
  int n;
  Poly<BigRat> phi;  // monic, irreducible, degree phi(n)
};

std::shared_ptr<const CycloCtx> cyclo_context(int n);

// The N-th cyclotomic polynomial, computed by dividing x^n - 1 by the
// cyclotomic polynomials of the proper divisors of n.
Poly<BigRat> cyclotomic_poly(int n);

// Element of Q(zeta_N), or a plain rational when no context is attached.
// Rationals act as scalars of every Q(zeta_N): arithmetic between a
// context-free element and a contextful one adopts the context. This keeps
// zero() and one() expressible without knowing N, which the generic
// polynomial and fraction templates require.
class CycloElem {
 public:
  CycloElem() = default;
  explicit CycloElem(BigRat r) : coords_(Poly<BigRat>::constant(std::move(r))) {}
  CycloElem(std::shared_ptr<const CycloCtx> ctx, Poly<BigRat> coords);

  static CycloElem from_int(long n) { return CycloElem(BigRat(n)); }
  static CycloElem zeta(const std::shared_ptr<const CycloCtx>& ctx);

  bool is_rational() const { return ctx_ == nullptr || coords_.is_constant(); }
  bool is_zero() const { return coords_.is_zero(); }
  bool is_one() const { return coords_.is_one(); }

  const std::shared_ptr<const CycloCtx>& ctx() const { return ctx_; }
  const Poly<BigRat>& coords() const { return coords_; }

  // The rational value of an element with constant coordinates.
  BigRat to_rational() const;

  CycloElem operator-() const;
  friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator/(const CycloElem& a, const CycloElem& b);
  CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
  CycloElem& operator-=(const CycloElem& o) { return *this = *this - o; }
  CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }
  CycloElem& operator/=(const CycloElem& o) { return *this = *this / o; }

  CycloElem inv() const;
  CycloElem pow(long e) const;

  // Image under the Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
  CycloElem galois(long k) const;

  friend bool operator==(const CycloElem& a, const CycloElem& b);
  friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

  std::string str() const;

 private:
  static const CycloCtx* merge_ctx(const CycloElem& a, const CycloElem& b,
                                   std::shared_ptr<const CycloCtx>& out);
  void reduce();

  std::shared_ptr<const CycloCtx> ctx_;  // null for plain rationals
  Poly<BigRat> coords_;                  // degree < deg phi when ctx_ is set
};

using CyYRat = PFrac<CycloElem>;  // rational functions of y over Q(zeta_N)

// Collapses a fraction with rational coefficients to the base field Q(y).
YRat descend_to_rational(const CyYRat& f);

}  // namespace quotgen
