#include "quotgen/cyclotomic.hpp"

#include "doctest.h"
#include "quotgen/errors.hpp"

using quotgen::BigRat;
using quotgen::CycloElem;
using quotgen::CyYRat;
using quotgen::Error;
using quotgen::Poly;
using quotgen::cyclo_context;
using quotgen::cyclotomic_poly;

namespace {
Poly<BigRat> ipoly(std::initializer_list<long> coeffs) {
  std::vector<BigRat> v;
  for (long c : coeffs) v.emplace_back(c);
  return Poly<BigRat>(std::move(v));
}
}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == ipoly({-1, 1}));
  CHECK(cyclotomic_poly(2) == ipoly({1, 1}));
  CHECK(cyclotomic_poly(3) == ipoly({1, 1, 1}));
  CHECK(cyclotomic_poly(4) == ipoly({1, 0, 1}));
  CHECK(cyclotomic_poly(5) == ipoly({1, 1, 1, 1, 1}));
  CHECK(cyclotomic_poly(6) == ipoly({1, -1, 1}));
  CHECK(cyclotomic_poly(12) == ipoly({1, 0, -1, 0, 1}));
}

TEST_CASE("roots of unity satisfy their relations") {
  auto c3 = cyclo_context(3);
  CycloElem z = CycloElem::zeta(c3);
  CHECK(z.pow(3).is_one());
  CHECK(!z.pow(1).is_one());
  CHECK(!z.pow(2).is_one());
  // 1 + z + z^2 = 0
  CHECK((CycloElem::from_int(1) + z + z * z).is_zero());
  // Powers sum telescopes: product of (x - z^i) over i=0,1,2 is x^3 - 1,
  // so z * z^2 * 1 = 1 and sums of conjugates are rational.
  CHECK((z * z.pow(2)).is_one());
}

TEST_CASE("rational and cyclotomic elements mix") {
  auto c5 = cyclo_context(5);
  CycloElem z = CycloElem::zeta(c5);
  CycloElem half(BigRat(1, 2));
  CycloElem s = half + z;
  CHECK(!s.is_rational());
  CHECK((s - z) == half);
  CHECK((s - z).to_rational() == BigRat(1, 2));
  CHECK_THROWS_AS(z.to_rational(), Error);
  auto c3 = cyclo_context(3);
  CHECK_THROWS_AS(z + CycloElem::zeta(c3), Error);
}

TEST_CASE("inverses in the field") {
  auto c5 = cyclo_context(5);
  CycloElem z = CycloElem::zeta(c5);
  CycloElem a = CycloElem::from_int(1) - z;  // nonzero
  CHECK((a * a.inv()).is_one());
  CHECK((z.inv() * z).is_one());
  CHECK(z.inv() == z.pow(4));
  CHECK(z.pow(-3) == z.pow(2));
  CHECK_THROWS_AS(CycloElem(BigRat(0)).inv(), Error);
}

TEST_CASE("galois action permutes conjugates") {
  auto c5 = cyclo_context(5);
  CycloElem z = CycloElem::zeta(c5);
  CHECK(z.galois(2) == z.pow(2));
  CycloElem a = z + z.inv();  // fixed by zeta -> zeta^{-1}
  CHECK(a.galois(4) == a);
  CHECK_THROWS_AS(z.galois(5), Error);
  // Averaging over the Galois group lands in Q: sum of all primitive
  // fifth roots is -1.
  CycloElem sum;
  for (long k = 1; k <= 4; ++k) sum += z.galois(k);
  CHECK(sum.to_rational() == BigRat(-1));
}

TEST_CASE("fractions of y-polynomials over a cyclotomic field") {
  auto c3 = cyclo_context(3);
  CycloElem z = CycloElem::zeta(c3);
  using CPoly = Poly<CycloElem>;
  CPoly ymz({-z, CycloElem::from_int(1)});        // y - z
  CPoly ymz2({-(z * z), CycloElem::from_int(1)}); // y - z^2
  // (y - z)(y - z^2) = y^2 + y + 1 has rational coefficients.
  CyYRat prod{ymz * ymz2};
  auto r = quotgen::descend_to_rational(prod);
  CHECK(r.num() == ipoly({1, 1, 1}));
  CHECK(r.den().is_one());
  CyYRat f(ymz, ymz * ymz2);
  CHECK(f.num().is_one());
  CHECK(f.den() == ymz2);
  CHECK_THROWS_AS(quotgen::descend_to_rational(f), Error);
}
