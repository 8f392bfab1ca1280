#include "quotgen/rational.hpp"

#include <numeric>
#include <ostream>

namespace quotgen {

BigRat::BigRat(long num, long den) {
  if (den == 0) raise(Errc::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRat BigRat::from_string(const std::string& s) {
  if (s.empty()) raise(Errc::InvalidArgument, "empty rational literal");
  mpq_class v;
  if (v.set_str(s, 10) != 0) raise(Errc::InvalidArgument, "bad rational literal: " + s);
  if (sgn(v.get_den()) == 0) raise(Errc::DivisionByZero, "rational literal with zero denominator");
  v.canonicalize();
  return BigRat(std::move(v));
}

BigRat BigRat::operator-() const { return BigRat(mpq_class(-v_)); }
BigRat& BigRat::operator+=(const BigRat& o) { v_ += o.v_; return *this; }
BigRat& BigRat::operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
BigRat& BigRat::operator*=(const BigRat& o) { v_ *= o.v_; return *this; }

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) raise(Errc::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

BigRat BigRat::inv() const {
  if (is_zero()) raise(Errc::DivisionByZero, "inverse of zero");
  return BigRat(mpq_class(1) / v_);
}

BigRat BigRat::pow(long e) const {
  if (e == 0) return BigRat(1);
  BigRat base = e > 0 ? *this : inv();
  unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), n);
  return BigRat(mpq_class(num, den));
}

BigRat BigRat::abs() const { return is_negative() ? -*this : *this; }

BigRat BigRat::rational_gcd(const BigRat& a, const BigRat& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  mpz_class num, den;
  mpz_class cross1 = a.v_.get_num() * b.v_.get_den();
  mpz_class cross2 = b.v_.get_num() * a.v_.get_den();
  mpz_gcd(num.get_mpz_t(), cross1.get_mpz_t(), cross2.get_mpz_t());
  den = a.v_.get_den() * b.v_.get_den();
  mpq_class g(num, den);
  g.canonicalize();
  return BigRat(std::move(g));
}

long BigRat::floor_long() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  if (!q.fits_slong_p()) raise(Errc::InvalidArgument, "floor out of long range");
  return q.get_si();
}

long BigRat::to_long() const {
  if (!is_integer()) raise(Errc::InvalidArgument, "rational is not an integer: " + str());
  if (!v_.get_num().fits_slong_p()) raise(Errc::InvalidArgument, "integer out of long range");
  return v_.get_num().get_si();
}

std::string BigRat::str() const {
  if (is_integer()) return numerator_str();
  return numerator_str() + "/" + denominator_str();
}

std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.str(); }

BigRat binomial_falling(long n, long d) {
  if (d < 0) raise(Errc::InvalidArgument, "binomial with negative lower index");
  BigRat result(1);
  for (long k = 0; k < d; ++k) {
    result *= BigRat(n - k);
    result /= BigRat(k + 1);
  }
  return result;
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace quotgen
