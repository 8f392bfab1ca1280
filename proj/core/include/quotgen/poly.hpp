#pragma once

#include <algorithm>
#include <type_traits>
#include <utility>
#include <vector>

#include "quotgen/errors.hpp"
#include "quotgen/rational.hpp"

namespace quotgen {

// Dense univariate polynomial over a commutative coefficient ring C.
// coeffs_[e] is the coefficient of x^e; the vector carries no trailing
// zeros, and the zero polynomial is the empty vector. Which formal
// variable x stands for (y, q, z, t, u, s) is decided by the surrounding
// structure, not stored here.
template <class C>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly constant(C v) {
    Poly p;
    if (!v.is_zero()) p.c_.push_back(std::move(v));
    return p;
  }
  static Poly from_int(long n) { return constant(C::from_int(n)); }
  static Poly one() { return from_int(1); }
  static Poly monomial(C v, int e) {
    Poly p;
    if (!v.is_zero()) {
      p.c_.assign(static_cast<size_t>(e) + 1, C());
      p.c_[static_cast<size_t>(e)] = std::move(v);
    }
    return p;
  }
  static Poly x() { return monomial(C::from_int(1), 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }

  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Lowest exponent with nonzero coefficient; 0 for the zero polynomial.
  int valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<int>(i);
    return 0;
  }

  const C& lead() const {
    if (c_.empty()) raise(Errc::InvalidArgument, "leading coefficient of zero polynomial");
    return c_.back();
  }
  C coeff(int e) const {
    if (e < 0 || static_cast<size_t>(e) >= c_.size()) return C();
    return c_[static_cast<size_t>(e)];
  }
  const std::vector<C>& coeffs() const { return c_; }

  void set_coeff(int e, C v) {
    if (e < 0) raise(Errc::ExponentOutOfRange, "negative polynomial exponent");
    if (static_cast<size_t>(e) >= c_.size()) c_.resize(static_cast<size_t>(e) + 1, C());
    c_[static_cast<size_t>(e)] = std::move(v);
    trim();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, C());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.trim();
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly& scale(const C& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v = v * s;
    trim();
    return *this;
  }
  friend Poly operator*(Poly a, const C& s) { return a.scale(s); }

  Poly shifted(int k) const {  // multiply by x^k, k >= 0
    if (is_zero()) return Poly();
    Poly r;
    r.c_.assign(c_.size() + static_cast<size_t>(k), C());
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
  }

  // Quotient after dividing by x^k; requires the k lowest coefficients to vanish.
  Poly unshifted(int k) const {
    if (is_zero()) return Poly();
    for (int i = 0; i < k; ++i)
      if (!coeff(i).is_zero()) raise(Errc::InvalidArgument, "polynomial not divisible by monomial");
    Poly r;
    r.c_.assign(c_.begin() + k, c_.end());
    r.trim();
    return r;
  }

  Poly pow(unsigned long e) const {
    Poly r = one();
    Poly base = *this;
    while (true) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e == 0) break;
      base *= base;
    }
    return r;
  }

  template <class T>
  T eval(const T& x) const {
    T r{};
    for (size_t i = c_.size(); i-- > 0;) {
      r = r * x + T(c_[i]);
    }
    return r;
  }
  C eval_c(const C& x) const {
    C r{};
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  // x^D * p(1/x) for D >= deg p: coefficient reversal with padding.
  Poly reversed_padded(int D) const {
    if (D < degree()) raise(Errc::InvalidArgument, "reversal degree below polynomial degree");
    Poly r;
    r.c_.assign(static_cast<size_t>(D) + 1, C());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[static_cast<size_t>(D) - i] = c_[i];
    r.trim();
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<C> c_;
};

// Division with remainder over a coefficient field.
template <class C>
std::pair<Poly<C>, Poly<C>> divrem(const Poly<C>& a, const Poly<C>& b) {
  if (b.is_zero()) raise(Errc::DivisionByZero, "polynomial division by zero");
  Poly<C> q, r = a;
  const C lead_inv = b.lead().inv();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int d = r.degree() - b.degree();
    C f = r.lead() * lead_inv;
    q += Poly<C>::monomial(f, d);
    r -= b.shifted(d).scale(f);
  }
  return {q, r};
}

template <class C>
Poly<C> exact_div(const Poly<C>& a, const Poly<C>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) raise(Errc::InvalidArgument, "polynomial division is not exact");
  return q;
}

// Monic gcd by the Euclidean algorithm; suitable when coefficient arithmetic
// does not swell (cyclotomic numbers, root-field elements).
template <class C>
Poly<C> gcd_euclid(Poly<C> a, Poly<C> b) {
  while (!b.is_zero()) {
    auto [q, r] = divrem(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scale(a.lead().inv());
}

// Rational coefficients swell along the plain Euclidean remainder sequence,
// so the gcd is taken on integer-cleared primitive parts by a
// pseudo-remainder sequence whose integer content is stripped at every step.
Poly<BigRat> gcd_euclid(Poly<BigRat> a, Poly<BigRat> b);

// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
template <class C>
struct ExtGcd {
  Poly<C> g, u, v;
};

template <class C>
ExtGcd<C> ext_gcd(const Poly<C>& a, const Poly<C>& b) {
  Poly<C> r0 = a, r1 = b;
  Poly<C> u0 = Poly<C>::one(), u1;
  Poly<C> v0, v1 = Poly<C>::one();
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly<C> u2 = u0 - q * u1;
    Poly<C> v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  const C s = r0.lead().inv();
  return {r0.scale(s), u0.scale(s), v0.scale(s)};
}

template <class C>
class PFrac;

template <class T>
struct is_pfrac : std::false_type {};
template <class C>
struct is_pfrac<PFrac<C>> : std::true_type {};

// --- gcd for polynomials whose coefficients are themselves fractions ---
//
// For Poly<PFrac<C>> the naive Euclidean algorithm multiplies inner
// denominators at every step and the y-degrees explode. Instead the two
// inputs are cleared to bivariate polynomials over C and reduced by a
// primitive pseudo-remainder sequence, where every step strips the inner
// content. Degrees stay proportional to the inputs.

// Rescales by a nonzero constant so that the scalar coefficients are
// integers with no common factor. A no-op for coefficient rings without a
// numeric content.
template <class C>
void strip_numeric_content(Poly<Poly<C>>&) {}
void strip_numeric_content(Poly<Poly<BigRat>>& a);

template <class C>
Poly<C> inner_content(const Poly<Poly<C>>& a) {
  Poly<C> g;
  for (const auto& co : a.coeffs()) {
    if (co.is_zero()) continue;
    g = gcd_euclid(g, co);
    if (g.degree() == 0) break;
  }
  return g;  // monic or zero
}

template <class C>
Poly<Poly<C>> inner_divide(const Poly<Poly<C>>& a, const Poly<C>& d) {
  std::vector<Poly<C>> out;
  out.reserve(a.coeffs().size());
  for (const auto& co : a.coeffs()) out.push_back(co.is_zero() ? Poly<C>() : exact_div(co, d));
  return Poly<Poly<C>>(std::move(out));
}

template <class C>
Poly<Poly<C>> primitive_part(const Poly<Poly<C>>& a) {
  if (a.is_zero()) return a;
  Poly<C> g = inner_content(a);
  Poly<Poly<C>> r = g.is_one() ? a : inner_divide(a, g);
  strip_numeric_content(r);
  return r;
}

// Pseudo-remainder of a by b in the outer variable (b nonzero).
template <class C>
Poly<Poly<C>> pseudo_rem(Poly<Poly<C>> a, const Poly<Poly<C>>& b) {
  const int db = b.degree();
  const Poly<C> lb = b.lead();
  while (!a.is_zero() && a.degree() >= db) {
    const int d = a.degree() - db;
    const Poly<C> la = a.lead();
    a.scale(lb);
    a -= b.shifted(d).scale(la);
  }
  return a;
}

template <class C>
Poly<Poly<C>> bivar_gcd_primitive(Poly<Poly<C>> a, Poly<Poly<C>> b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly<Poly<C>> r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return a;  // primitive; inner-content of callers handled separately
}

// Clears inner denominators: returns (P, d) with fracpoly = P / d.
template <class C>
std::pair<Poly<Poly<C>>, Poly<C>> clear_denominators(const Poly<PFrac<C>>& a) {
  Poly<C> lcm = Poly<C>::one();
  for (const auto& co : a.coeffs()) {
    if (co.is_zero()) continue;
    const Poly<C>& d = co.den();
    Poly<C> g = gcd_euclid(lcm, d);
    lcm = exact_div(lcm * d, g);
  }
  std::vector<Poly<C>> nums;
  nums.reserve(a.coeffs().size());
  for (const auto& co : a.coeffs()) {
    if (co.is_zero()) {
      nums.push_back(Poly<C>());
    } else {
      nums.push_back(co.num() * exact_div(lcm, co.den()));
    }
  }
  return {Poly<Poly<C>>(std::move(nums)), lcm};
}

template <class C>
Poly<PFrac<C>> lift_bivar(const Poly<Poly<C>>& p) {
  std::vector<PFrac<C>> out;
  out.reserve(p.coeffs().size());
  for (const auto& co : p.coeffs()) out.push_back(PFrac<C>(co));
  return Poly<PFrac<C>>(std::move(out));
}

template <class K>
Poly<K> poly_gcd(const Poly<K>& a, const Poly<K>& b) {
  if constexpr (is_pfrac<K>::value) {
    if (a.is_zero() && b.is_zero()) return Poly<K>();
    auto [pa, da] = clear_denominators(a);
    auto [pb, db] = clear_denominators(b);
    (void)da;
    (void)db;
    auto g = bivar_gcd_primitive(std::move(pa), std::move(pb));
    Poly<K> lifted = lift_bivar(g);
    if (lifted.is_zero()) return lifted;
    return lifted.scale(lifted.lead().inv());
  } else {
    return gcd_euclid(a, b);
  }
}

// Reduced fraction of polynomials over a field C: an element of C(x).
// Invariants: denominator nonzero and monic; numerator and denominator coprime.
template <class C>
class PFrac {
 public:
  PFrac() : num_(), den_(Poly<C>::one()) {}
  PFrac(const Poly<C>& num) : num_(num), den_(Poly<C>::one()) {}  // NOLINT
  PFrac(Poly<C> num, Poly<C> den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
  static PFrac from_int(long n) { return PFrac(Poly<C>::from_int(n)); }
  static PFrac one() { return from_int(1); }
  static PFrac x() { return PFrac(Poly<C>::x()); }

  const Poly<C>& num() const { return num_; }
  const Poly<C>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  PFrac operator-() const {
    PFrac r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend PFrac operator+(const PFrac& a, const PFrac& b) {
    return PFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend PFrac operator-(const PFrac& a, const PFrac& b) {
    return PFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend PFrac operator*(const PFrac& a, const PFrac& b) {
    if (a.is_zero() || b.is_zero()) return PFrac();
    return PFrac(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend PFrac operator/(const PFrac& a, const PFrac& b) {
    if (b.is_zero()) raise(Errc::DivisionByZero, "rational function division by zero");
    if (a.is_zero()) return PFrac();
    return PFrac(a.num_ * b.den_, a.den_ * b.num_);
  }
  PFrac& operator+=(const PFrac& o) { return *this = *this + o; }
  PFrac& operator-=(const PFrac& o) { return *this = *this - o; }
  PFrac& operator*=(const PFrac& o) { return *this = *this * o; }
  PFrac& operator/=(const PFrac& o) { return *this = *this / o; }

  PFrac inv() const {
    if (is_zero()) raise(Errc::DivisionByZero, "inverse of zero rational function");
    PFrac r;
    r.num_ = den_;
    r.den_ = num_;
    const C lead_inv = r.den_.lead().inv();
    r.num_.scale(lead_inv);
    r.den_.scale(lead_inv);
    return r;
  }

  PFrac pow(long e) const {
    if (e == 0) return one();
    PFrac base = e > 0 ? *this : inv();
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    PFrac r = one();
    while (true) {
      if (n & 1) r *= base;
      n >>= 1;
      if (n == 0) break;
      base *= base;
    }
    return r;
  }

  // Evaluation at a point of the coefficient field.
  C eval(const C& x) const {
    C d = den_.eval_c(x);
    if (d.is_zero()) raise(Errc::DivisionByZero, "pole of rational function at evaluation point");
    return num_.eval_c(x) * d.inv();
  }

  friend bool operator==(const PFrac& a, const PFrac& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const PFrac& a, const PFrac& b) { return !(a == b); }

 private:
  void reduce() {
    if (den_.is_zero()) raise(Errc::DivisionByZero, "fraction with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<C>::one();
      return;
    }
    if (!den_.is_one()) {
      Poly<C> g = poly_gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
      }
    }
    if (!den_.lead().is_one()) {
      const C lead_inv = den_.lead().inv();
      num_.scale(lead_inv);
      den_.scale(lead_inv);
    }
  }

  Poly<C> num_, den_;
};

using YPoly = Poly<BigRat>;   // polynomials in y (or u, t, q, z) over Q
using YRat = PFrac<BigRat>;   // the field Q(y); also used for Q(u) with u = sqrt(y)
using URat = YRat;

}  // namespace quotgen
