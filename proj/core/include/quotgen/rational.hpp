#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "quotgen/errors.hpp"

namespace quotgen {

// Arbitrary-precision rational number. Values are kept reduced with a
// positive denominator at all times (GMP's canonical form), so equality
// is structural.
class BigRat {
 public:
  BigRat() : v_(0) {}
  BigRat(long n) : v_(n) {}  // NOLINT: implicit on purpose, constants read naturally
  BigRat(long num, long den);
  static BigRat one() { return BigRat(1); }
  static BigRat from_int(long n) { return BigRat(n); }

  // Accepts "a", "-a", "a/b" in base 10.
  static BigRat from_string(const std::string& s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return sgn(v_) < 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  BigRat operator-() const;
  BigRat& operator+=(const BigRat& o);
  BigRat& operator-=(const BigRat& o);
  BigRat& operator*=(const BigRat& o);
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

  BigRat inv() const;
  BigRat pow(long e) const;  // e may be negative for nonzero values
  BigRat abs() const;

  // Content gcd: the largest positive rational g with a/g and b/g both
  // integers, i.e. gcd(numerators)/lcm(denominators); gcd(0, b) = |b|.
  static BigRat rational_gcd(const BigRat& a, const BigRat& b);

  // Floor of the rational as a long; requires the value to fit.
  long floor_long() const;
  // Exact conversion to long; raises if not an integer or out of range.
  long to_long() const;

  // Underlying GMP value, for exact kernels working at the mpz/mpq level.
  const mpq_class& raw() const { return v_; }
  static BigRat from_raw(mpq_class v) {
    v.canonicalize();
    return BigRat(std::move(v));
  }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }
  // Canonical text form "a/b" (reduced, positive denominator, b printed even when 1).
  std::string encode() const { return numerator_str() + "/" + denominator_str(); }
  // Human-oriented form: omits "/1".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const BigRat& r);

 private:
  explicit BigRat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

// Falling-factorial binomial n(n-1)...(n-d+1)/d!, valid for any integer n
// and d >= 0; the standard reading that makes alternating divisor sums finite.
BigRat binomial_falling(long n, long d);

// Positive gcd/lcm of the integer parts of two positive integers given as longs.
long lcm_long(long a, long b);

}  // namespace quotgen
