#pragma once

#include <string>
#include <vector>

#include "quotgen/errors.hpp"
#include "quotgen/poly.hpp"
#include "quotgen/rational.hpp"

namespace quotgen {

// Formal variable tag for series and rational functions exposed at the API
// surface. Internal computations reuse whichever tag matches their meaning.
enum class Var { q, t };

inline const char* var_name(Var v) { return v == Var::q ? "q" : "t"; }
inline Var var_from_name(const std::string& s) {
  if (s == "q") return Var::q;
  if (s == "t") return Var::t;
  raise(Errc::InvalidArgument, "unknown series variable: " + s);
}

// Truncated power series over a commutative ring F. Coefficients are stored
// densely for exponents 0..trunc() inclusive and are exact through that
// order; nothing is known beyond it. Binary operations truncate to the range
// both operands can certify, which for products exceeds min(Ta, Tb) when an
// operand has positive valuation.
template <class F>
class QSeries {
 public:
  QSeries() : var_(Var::q), c_(1, F()) {}
  QSeries(Var var, long trunc) : var_(var), c_(check_len(trunc), F()) {}
  QSeries(Var var, std::vector<F> coeffs) : var_(var), c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(F());
  }

  static QSeries constant(Var var, F v, long trunc) {
    QSeries s(var, trunc);
    s.c_[0] = std::move(v);
    return s;
  }
  static QSeries one(Var var, long trunc) { return constant(var, F::from_int(1), trunc); }
  static QSeries monomial(Var var, F v, long e, long trunc) {
    QSeries s(var, trunc);
    if (e < 0) raise(Errc::ExponentOutOfRange, "negative exponent in power series");
    if (e <= trunc) s.c_[static_cast<size_t>(e)] = std::move(v);
    return s;
  }

  Var var() const { return var_; }
  long trunc() const { return static_cast<long>(c_.size()) - 1; }

  const F& coeff(long e) const {
    if (e < 0 || e > trunc())
      raise(Errc::ExponentOutOfRange, "series coefficient beyond truncation order");
    return c_[static_cast<size_t>(e)];
  }
  void set_coeff(long e, F v) {
    if (e < 0 || e > trunc())
      raise(Errc::ExponentOutOfRange, "series coefficient beyond truncation order");
    c_[static_cast<size_t>(e)] = std::move(v);
  }
  const std::vector<F>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  // Lowest known exponent with nonzero coefficient; trunc()+1 for a series
  // that vanishes through the truncation order.
  long valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<long>(i);
    return trunc() + 1;
  }

  QSeries truncated(long t) const {
    if (t >= trunc()) return *this;
    QSeries s(var_, t);
    for (long e = 0; e <= t; ++e) s.c_[static_cast<size_t>(e)] = c_[static_cast<size_t>(e)];
    return s;
  }

  QSeries operator-() const {
    QSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    a.check_var(b);
    QSeries r(a.var_, std::min(a.trunc(), b.trunc()));
    for (long e = 0; e <= r.trunc(); ++e)
      r.c_[static_cast<size_t>(e)] = a.c_[static_cast<size_t>(e)] + b.c_[static_cast<size_t>(e)];
    return r;
  }
  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    a.check_var(b);
    QSeries r(a.var_, std::min(a.trunc(), b.trunc()));
    for (long e = 0; e <= r.trunc(); ++e)
      r.c_[static_cast<size_t>(e)] = a.c_[static_cast<size_t>(e)] - b.c_[static_cast<size_t>(e)];
    return r;
  }
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    a.check_var(b);
    const long va = a.valuation(), vb = b.valuation();
    long t = std::min(a.trunc() + vb, b.trunc() + va);
    t = std::min({t, a.trunc() + b.trunc()});
    QSeries r(a.var_, std::max(t, 0L));
    for (long i = va; i <= a.trunc(); ++i) {
      const F& ai = a.c_[static_cast<size_t>(i)];
      if (ai.is_zero()) continue;
      const long jmax = std::min(b.trunc(), r.trunc() - i);
      for (long j = vb; j <= jmax; ++j) {
        const F& bj = b.c_[static_cast<size_t>(j)];
        if (bj.is_zero()) continue;
        r.c_[static_cast<size_t>(i + j)] += ai * bj;
      }
    }
    return r;
  }
  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  QSeries& scale(const F& s) {
    for (auto& v : c_) v = v * s;
    return *this;
  }

  QSeries pow(unsigned long e) const {
    QSeries r = one(var_, trunc());
    QSeries base = *this;
    while (true) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e == 0) break;
      base *= base;
    }
    return r;
  }

  // Multiplicative inverse of a series with invertible constant term.
  QSeries inverted() const {
    if (c_[0].is_zero())
      raise(Errc::NotInvertible, "series inverse requires a nonzero constant term");
    const F c0inv = c_[0].inv();
    QSeries r(var_, trunc());
    r.c_[0] = c0inv;
    for (long n = 1; n <= trunc(); ++n) {
      F acc{};
      for (long k = 1; k <= n; ++k) {
        const F& ck = c_[static_cast<size_t>(k)];
        if (ck.is_zero()) continue;
        acc += ck * r.c_[static_cast<size_t>(n - k)];
      }
      r.c_[static_cast<size_t>(n)] = -(acc * c0inv);
    }
    return r;
  }

  // exp of a series with zero constant term, over a coefficient field of
  // characteristic zero.
  QSeries exp() const {
    if (!c_[0].is_zero()) raise(Errc::ExpOfUnit, "series exponential requires zero constant term");
    QSeries r = one(var_, trunc());
    QSeries term = one(var_, trunc());
    F factorial = F::from_int(1);
    for (long k = 1; k <= trunc(); ++k) {
      term *= *this;
      term = term.truncated(trunc());
      factorial = factorial * F::from_int(k);
      QSeries scaled = term;
      scaled.scale(factorial.inv());
      r += scaled;
    }
    return r;
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    if (a.var_ != b.var_ || a.trunc() != b.trunc()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

 private:
  static size_t check_len(long trunc) {
    if (trunc < 0) raise(Errc::InvalidArgument, "negative series truncation order");
    return static_cast<size_t>(trunc) + 1;
  }
  void check_var(const QSeries& o) const {
    if (var_ != o.var_) raise(Errc::VariableMismatch, "series in different variables");
  }

  Var var_;
  std::vector<F> c_;
};

using YQSeries = QSeries<YRat>;

}  // namespace quotgen
