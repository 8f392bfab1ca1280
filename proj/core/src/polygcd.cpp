#include "quotgen/poly.hpp"

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace quotgen {

namespace {

void trim_int(std::vector<mpz_class>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void strip_content_int(std::vector<mpz_class>& v) {
  mpz_class g(0);
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g <= 1) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Dense integer image of p with denominators cleared and content removed.
std::vector<mpz_class> primitive_integer_image(const Poly<BigRat>& p) {
  const auto& cs = p.coeffs();
  mpz_class l(1);
  for (const auto& c : cs)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), mpq_denref(c.raw().get_mpq_t()));
  std::vector<mpz_class> v(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) {
    const mpq_class& r = cs[i].raw();
    mpz_divexact(v[i].get_mpz_t(), l.get_mpz_t(), mpq_denref(r.get_mpq_t()));
    mpz_mul(v[i].get_mpz_t(), v[i].get_mpz_t(), mpq_numref(r.get_mpq_t()));
  }
  strip_content_int(v);
  return v;
}

// Replaces a by its pseudo-remainder modulo b; b is nonzero.
void pseudo_rem_int(std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  const mpz_class& lb = b.back();
  mpz_class t;
  while (a.size() >= b.size()) {
    const size_t d = a.size() - b.size();
    const mpz_class la = a.back();
    for (auto& x : a) x *= lb;
    for (size_t i = 0; i + 1 < b.size(); ++i) {
      mpz_mul(t.get_mpz_t(), la.get_mpz_t(), b[i].get_mpz_t());
      a[d + i] -= t;
    }
    a.pop_back();
    trim_int(a);
  }
}

}  // namespace

Poly<BigRat> gcd_euclid(Poly<BigRat> a, Poly<BigRat> b) {
  if (b.is_zero()) std::swap(a, b);
  if (a.is_zero()) {
    if (b.is_zero()) return b;
    return b.scale(b.lead().inv());
  }
  std::vector<mpz_class> va = primitive_integer_image(a);
  std::vector<mpz_class> vb = primitive_integer_image(b);
  if (va.size() < vb.size()) std::swap(va, vb);
  while (!vb.empty()) {
    pseudo_rem_int(va, vb);
    strip_content_int(va);
    std::swap(va, vb);
  }
  std::vector<BigRat> out(va.size());
  for (size_t i = 0; i < va.size(); ++i)
    out[i] = BigRat::from_raw(mpq_class(va[i], va.back()));
  return Poly<BigRat>(std::move(out));
}

void strip_numeric_content(Poly<Poly<BigRat>>& a) {
  if (a.is_zero()) return;
  mpz_class g(0), l(1);
  for (const auto& inner : a.coeffs())
    for (const auto& c : inner.coeffs()) {
      const mpq_class& r = c.raw();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpq_numref(r.get_mpq_t()));
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), mpq_denref(r.get_mpq_t()));
    }
  if (g == 0) return;
  mpq_class s(l, g);
  s.canonicalize();
  if (s == 1) return;
  a.scale(Poly<BigRat>::constant(BigRat::from_raw(std::move(s))));
}

}  // namespace quotgen
