#include <gmp.h>

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

#include "quotgen/wcoeff.hpp"

namespace quotgen {

namespace {

// Below this schoolbook work estimate the packed path loses to its own
// setup cost.
constexpr size_t kPackThreshold = size_t(1) << 12;

size_t bit_length(size_t v) {
  size_t b = 0;
  while (v) {
    ++b;
    v >>= 1;
  }
  return b;
}

size_t term_count(const BivPoly& p) {
  size_t t = 0;
  for (const auto& yc : p.coeffs()) t += yc.coeffs().size();
  return t;
}

// Integer image: every coefficient times the common denominator of the
// whole polynomial, stored densely, y-minor within each z degree.
struct ZImage {
  mpz_class lcm;
  std::vector<mpz_class> c;
  int zdeg = -1;
  int ydeg = 0;
  size_t maxbits = 0;
  size_t nonzero = 0;
};

ZImage to_image(const BivPoly& p) {
  ZImage im;
  im.lcm = 1;
  const auto& pc = p.coeffs();
  im.zdeg = p.degree();
  for (const auto& yc : pc) im.ydeg = std::max(im.ydeg, yc.degree());
  for (const auto& yc : pc)
    for (const auto& r : yc.coeffs())
      if (!r.is_zero())
        mpz_lcm(im.lcm.get_mpz_t(), im.lcm.get_mpz_t(), mpq_denref(r.raw().get_mpq_t()));
  im.c.assign(static_cast<size_t>(im.zdeg + 1) * (im.ydeg + 1), mpz_class());
  mpz_class t;
  for (size_t zi = 0; zi < pc.size(); ++zi) {
    const auto& ycs = pc[zi].coeffs();
    for (size_t yi = 0; yi < ycs.size(); ++yi) {
      const BigRat& r = ycs[yi];
      if (r.is_zero()) continue;
      mpz_divexact(t.get_mpz_t(), im.lcm.get_mpz_t(), mpq_denref(r.raw().get_mpq_t()));
      mpz_mul(t.get_mpz_t(), t.get_mpz_t(), mpq_numref(r.raw().get_mpq_t()));
      im.maxbits = std::max(im.maxbits, mpz_sizeinbase(t.get_mpz_t(), 2));
      ++im.nonzero;
      im.c[zi * static_cast<size_t>(im.ydeg + 1) + yi] = t;
    }
  }
  return im;
}

// Packs the image on the common y stride, slot(z, y) = z * yst + y, each
// slot w64 limbs wide. Positive and negative parts are packed separately
// so every limb run is a plain magnitude, then subtracted.
mpz_class pack(const ZImage& im, size_t yst, size_t w64) {
  const size_t words =
      (static_cast<size_t>(im.zdeg) * yst + static_cast<size_t>(im.ydeg) + 1) * w64;
  std::vector<uint64_t> pos(words, 0), neg(words, 0);
  bool any_neg = false;
  const size_t yd = static_cast<size_t>(im.ydeg) + 1;
  for (int zi = 0; zi <= im.zdeg; ++zi) {
    for (size_t yi = 0; yi < yd; ++yi) {
      const mpz_class& v = im.c[static_cast<size_t>(zi) * yd + yi];
      const int s = sgn(v);
      if (s == 0) continue;
      if (s < 0) any_neg = true;
      uint64_t* dst = (s > 0 ? pos : neg).data() + (static_cast<size_t>(zi) * yst + yi) * w64;
      mpz_export(dst, nullptr, -1, 8, 0, 0, v.get_mpz_t());
    }
  }
  mpz_class a;
  mpz_import(a.get_mpz_t(), pos.size(), -1, 8, 0, 0, pos.data());
  if (any_neg) {
    mpz_class n;
    mpz_import(n.get_mpz_t(), neg.size(), -1, 8, 0, 0, neg.data());
    a -= n;
  }
  return a;
}

}  // namespace

BivPoly cell_mul(const BivPoly& a, const BivPoly& b) {
  if (a.is_zero() || b.is_zero()) return BivPoly();
  if (term_count(a) * term_count(b) <= kPackThreshold) return a * b;
  const ZImage ia = to_image(a);
  const ZImage ib = to_image(b);

  const size_t yst = static_cast<size_t>(ia.ydeg) + static_cast<size_t>(ib.ydeg) + 1;
  const int zdeg = ia.zdeg + ib.zdeg;
  const size_t slots = static_cast<size_t>(zdeg) * yst + yst;
  // Slot width: a convolution entry is at most max|a| * max|b| * overlap,
  // and the balanced decode needs one extra bit of headroom plus the sign.
  size_t wbits =
      ia.maxbits + ib.maxbits + bit_length(std::min(ia.nonzero, ib.nonzero)) + 2;
  const size_t w64 = (wbits + 63) / 64;
  wbits = w64 * 64;

  const mpz_class prod = pack(ia, yst, w64) * pack(ib, yst, w64);
  const int psign = sgn(prod);
  if (psign == 0) return BivPoly();

  std::vector<uint64_t> buf(slots * w64, 0);
  mpz_export(buf.data(), nullptr, -1, 8, 0, 0, prod.get_mpz_t());

  const mpz_class beta = mpz_class(1) << wbits;
  const mpz_class half = mpz_class(1) << (wbits - 1);
  const mpz_class den = ia.lcm * ib.lcm;
  std::vector<YPoly> zc(static_cast<size_t>(zdeg) + 1);
  mpz_class d;
  int carry = 0;
  for (size_t s = 0; s < slots; ++s) {
    const uint64_t* src = buf.data() + s * w64;
    if (carry == 0 && std::all_of(src, src + w64, [](uint64_t x) { return x == 0; })) continue;
    mpz_import(d.get_mpz_t(), w64, -1, 8, 0, 0, src);
    d += carry;
    carry = 0;
    if (d >= half) {
      d -= beta;
      carry = 1;
    }
    if (sgn(d) == 0) continue;
    if (psign < 0) mpz_neg(d.get_mpz_t(), d.get_mpz_t());
    zc[s / yst].set_coeff(static_cast<int>(s % yst), BigRat::from_raw(mpq_class(d, den)));
  }
  assert(carry == 0);
  return BivPoly(std::move(zc));
}

}  // namespace quotgen
