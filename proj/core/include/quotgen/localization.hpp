#pragma once

#include <string>
#include <vector>

#include "quotgen/mtrunc.hpp"
#include "quotgen/qratfun.hpp"
#include "quotgen/series.hpp"
#include "quotgen/wcoeff.hpp"

namespace quotgen {

// Equivariant affine weight h-part + shift*w, where w is the base tangent
// weight. Its exponential is z^shift * e^(h-part), with z the base torus
// character, so the class below only sees the shift through z^shift.
struct AffineArg {
  std::vector<BigRat> hcoeffs;
  long zshift = 0;
};

// Superincreasing default tangent weights 0, 1, 3, 7, ...; any vector of
// distinct integers is equally valid, which weight_independence_check
// exercises.
std::vector<long> default_weights(int n);

// chi_{-y} class of an affine weight, truncated to the given box:
//   shift != 0: (1 - y z^shift e^(-hpart)) / (1 - z^shift e^(-hpart)),
//   shift == 0: the composed one-variable genus series, with the convention
//               that a zero argument yields the constant 1 - y.
// A zero shift with an h-part spread over several variables has no
// well-defined expansion here and raises InvalidArgument.
MTrunc<WCoeff> xclass(const AffineArg& arg, const MCaps& caps);

// Fixed-locus integrand over the subset J of the N torus-fixed points. The
// h variables are indexed by J in ascending order, variable p belonging to
// J[p]. mbar gives the per-variable extraction caps (the box is per = mbar,
// total = sum mbar). Punctual loci take J = {1, ..., N}; the general-type
// loci take |J| = N - ell.
struct IntegrandSpec {
  int N = 1;
  std::vector<int> J;
  std::vector<long> weights;
  std::vector<int> mbar;

  static IntegrandSpec punctual(int N, std::vector<int> mbar,
                                std::vector<long> weights = {});
  static IntegrandSpec gentype(int N, std::vector<int> J, std::vector<int> mbar,
                               std::vector<long> weights = {});
};

// Transparent construction of the integrand by multiplying xclass factors in
// MTrunc<WCoeff> arithmetic, including the 1/(1-y)^|J| prefactor. Intended
// for inspection and cross-checks at small sizes; oracle_series uses a
// factored-denominator engine instead.
MTrunc<WCoeff> build_integrand(const IntegrandSpec& spec);

// First-principles generating series through q-order T by coefficient
// extraction at each fixed locus. punctual(N) sums over the single locus
// J = {1..N}; gentype(N, ell) sums over all |J| = N - ell. Weights default
// to default_weights(N). Each q-order is summed over a common factored
// denominator before the single z -> 1 limit; a genuine pole there raises
// PoleAtOne.
struct OracleRequest {
  enum class Kind { punctual, gentype };
  Kind kind = Kind::punctual;
  int N = 1;
  int ell = 0;
  long T = 5;
  std::vector<long> weights;

  static OracleRequest punctual(int N, long T, std::vector<long> weights = {});
  static OracleRequest gentype(int N, int ell, long T, std::vector<long> weights = {});
};

QSeries<YRat> oracle_series(const OracleRequest& req);

// Runs the oracle with the request's weights and with alt_weights and
// compares. Differences and any computational failure are reported in
// detail rather than thrown.
struct WeightIndependenceReport {
  bool independent = false;
  std::string detail;
};

WeightIndependenceReport weight_independence_check(const OracleRequest& base,
                                                   const std::vector<long>& alt_weights);

}  // namespace quotgen
