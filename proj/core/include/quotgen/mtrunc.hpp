#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "quotgen/errors.hpp"

namespace quotgen {

// Truncation box for multivariate series: per-variable inclusive exponent
// caps plus an inclusive cap on the total degree.
struct MCaps {
  std::vector<int> per;
  int total = 0;

  size_t nvars() const { return per.size(); }
  bool admits(const std::vector<int>& e) const {
    int sum = 0;
    for (size_t i = 0; i < per.size(); ++i) {
      if (e[i] < 0 || e[i] > per[i]) return false;
      sum += e[i];
    }
    return sum <= total;
  }
  friend bool operator==(const MCaps& a, const MCaps& b) {
    return a.per == b.per && a.total == b.total;
  }
};

inline MCaps uniform_caps(size_t nvars, int cap) {
  return MCaps{std::vector<int>(nvars, cap), cap};
}

// Coefficient product hook: coefficient types with a faster exact product
// than their operator* provide an overload for their own type.
template <class F>
F cell_mul(const F& a, const F& b) {
  return a * b;
}

// Multivariate polynomial in h_1..h_n truncated to a cap box, over a
// commutative ring F. Exponent vectors are the map keys; entries with zero
// coefficient are erased, so iteration order is the lexicographic order on
// surviving exponents.
template <class F>
class MTrunc {
 public:
  using ExpVec = std::vector<int>;
  using Map = std::map<ExpVec, F>;

  explicit MTrunc(MCaps caps) : caps_(std::move(caps)) {}

  static MTrunc constant(MCaps caps, F v) {
    MTrunc m(std::move(caps));
    if (!v.is_zero()) m.c_.emplace(ExpVec(m.caps_.nvars(), 0), std::move(v));
    return m;
  }
  static MTrunc one(MCaps caps) { return constant(std::move(caps), F::from_int(1)); }
  static MTrunc monomial(MCaps caps, F v, ExpVec e) {
    MTrunc m(std::move(caps));
    if (e.size() != m.caps_.nvars())
      raise(Errc::InvalidArgument, "exponent arity does not match truncation box");
    if (!v.is_zero() && m.caps_.admits(e)) m.c_.emplace(std::move(e), std::move(v));
    return m;
  }

  const MCaps& caps() const { return caps_; }
  size_t nvars() const { return caps_.nvars(); }
  const Map& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  F coeff(const ExpVec& e) const {
    auto it = c_.find(e);
    return it == c_.end() ? F() : it->second;
  }
  void add_term(const ExpVec& e, const F& v) {
    if (v.is_zero() || !caps_.admits(e)) return;
    auto [it, inserted] = c_.emplace(e, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  bool has_zero_constant_term() const { return c_.find(ExpVec(nvars(), 0)) == c_.end(); }

  MTrunc operator-() const {
    MTrunc r(caps_);
    for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
    return r;
  }

  MTrunc& operator+=(const MTrunc& o) {
    check_compat(o);
    for (const auto& [e, v] : o.c_) add_term(e, v);
    return *this;
  }
  MTrunc& operator-=(const MTrunc& o) {
    check_compat(o);
    for (const auto& [e, v] : o.c_) add_term(e, -v);
    return *this;
  }
  friend MTrunc operator+(MTrunc a, const MTrunc& b) { return a += b; }
  friend MTrunc operator-(MTrunc a, const MTrunc& b) { return a -= b; }

  friend MTrunc operator*(const MTrunc& a, const MTrunc& b) {
    a.check_compat(b);
    MTrunc r(a.caps_);
    ExpVec e(a.nvars());
    for (const auto& [ea, va] : a.c_) {
      for (const auto& [eb, vb] : b.c_) {
        bool ok = true;
        int sum = 0;
        for (size_t i = 0; i < e.size(); ++i) {
          e[i] = ea[i] + eb[i];
          sum += e[i];
          if (e[i] > a.caps_.per[i]) {
            ok = false;
            break;
          }
        }
        if (!ok || sum > a.caps_.total) continue;
        F prod = cell_mul(va, vb);
        if (prod.is_zero()) continue;
        auto [it, inserted] = r.c_.try_emplace(e, std::move(prod));
        if (!inserted) {
          it->second += prod;
          if (it->second.is_zero()) r.c_.erase(it);
        }
      }
    }
    return r;
  }
  MTrunc& operator*=(const MTrunc& o) { return *this = *this * o; }

  MTrunc& scale(const F& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto it = c_.begin(); it != c_.end();) {
      it->second = cell_mul(it->second, s);
      it = it->second.is_zero() ? c_.erase(it) : std::next(it);
    }
    return *this;
  }

  MTrunc pow(unsigned long n) const {
    MTrunc r = one(caps_);
    MTrunc base = *this;
    while (true) {
      if (n & 1) r *= base;
      n >>= 1;
      if (n == 0) break;
      base *= base;
    }
    return r;
  }

  // exp over a coefficient field of characteristic zero; the argument must
  // have no constant term, so powers beyond the total cap vanish.
  MTrunc exp() const {
    if (!has_zero_constant_term())
      raise(Errc::ExpOfUnit, "multivariate exponential requires zero constant term");
    MTrunc r = one(caps_);
    MTrunc term = one(caps_);
    F factorial = F::from_int(1);
    for (int k = 1; k <= caps_.total; ++k) {
      term *= *this;
      if (term.is_zero()) break;
      factorial = factorial * F::from_int(k);
      MTrunc scaled = term;
      scaled.scale(factorial.inv());
      r += scaled;
    }
    return r;
  }

  // Inverse of a series with invertible constant term, over a field:
  // 1/(c0 + P) = sum_k (-P)^k c0^{-k-1} with P the positive-degree part.
  MTrunc inverted() const {
    auto it = c_.find(ExpVec(nvars(), 0));
    if (it == c_.end())
      raise(Errc::NotInvertible, "multivariate inverse requires a nonzero constant term");
    const F c0inv = it->second.inv();
    MTrunc p = *this;
    p.c_.erase(ExpVec(nvars(), 0));
    MTrunc r = constant(caps_, c0inv);
    MTrunc pk = one(caps_);
    F scale_k = c0inv;
    for (int k = 1; k <= caps_.total; ++k) {
      pk *= p;
      if (pk.is_zero()) break;
      scale_k = scale_k * c0inv * F::from_int(-1);
      MTrunc scaled = pk;
      scaled.scale(scale_k);
      r += scaled;
    }
    return r;
  }

  friend bool operator==(const MTrunc& a, const MTrunc& b) {
    return a.caps_ == b.caps_ && a.c_ == b.c_;
  }
  friend bool operator!=(const MTrunc& a, const MTrunc& b) { return !(a == b); }

 private:
  void check_compat(const MTrunc& o) const {
    if (!(caps_ == o.caps_))
      raise(Errc::VariableMismatch, "multivariate series with different truncation boxes");
  }

  MCaps caps_;
  Map c_;
};

}  // namespace quotgen
