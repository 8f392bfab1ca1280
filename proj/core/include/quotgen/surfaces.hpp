#pragma once

#include <string>
#include <vector>

#include "quotgen/qratfun.hpp"
#include "quotgen/rational.hpp"

namespace quotgen {

// Surface kinds resolved by the assembly pipeline. `abstract_surface`
// carries raw (K^2, chi) with no geometric constraint checks.
enum class SurfaceKind { abstract_surface, elliptic, general_type, k3, abelian };

struct BlowupStep {
  int ell = 0;
};

// Minimal-model data plus the blow-up chain. k2 and chi describe the
// minimal model; for elliptic surfaces base_genus and mults describe the
// fibration (multiplicities of the multiple fibers, each >= 2).
struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::abstract_surface;
  long k2 = 0;
  long chi = 0;
  long base_genus = 0;
  std::vector<long> mults;
  std::vector<BlowupStep> blowups;
};

// The curve class handed to assemble: zero (punctual quotients), an
// ell-multiple of the canonical class, or a rational fiber multiple c.
struct ClassDescriptor {
  enum class Kind { punctual, canonical_multiple, fiber };
  Kind kind = Kind::punctual;
  int ell = 0;
  BigRat c;

  static ClassDescriptor punctual() { return {}; }
  static ClassDescriptor canonical(int ell);
  static ClassDescriptor fiber(BigRat c);
};

// Integer-valued Seiberg-Witten sum. `representable` is false when the
// class is not a nonnegative combination of fiber components (wrong
// denominator or negative), in which case the value is an exact zero.
struct SWValue {
  BigRat value;
  bool representable = false;
};

// SW(beta) for beta = c * F on a relatively minimal elliptic surface with
// multiple fibers of the given multiplicities: the sum of
// (-1)^d binom(2 g_C - 2 + chi, d) over all d >= 0, 0 <= a_j < m_j with
// d + sum a_j / m_j = c.
SWValue sw_fiber(const BigRat& c, long chi, long base_genus, const std::vector<long>& mults);

// Degree-N fiber-class series: the sum of SW(c_1 F) ... SW(c_N F) over all
// ordered N-tuples of admissible c_i >= 0 with sum c. Constant in q.
SWValue z_elliptic(int N, const BigRat& c, long chi, long base_genus,
                   const std::vector<long>& mults);

// Punctual series ubar(N)^k2; negative k2 inverts the rational function.
QRatFun z_punctual(int N, long k2);

// A series together with its provenance. `vanishing` marks a zero forced
// by a vanishing statement rather than a computed quantity.
struct ZSeries {
  QRatFun series;
  std::vector<std::string> trace;
  bool vanishing = false;
};

// Canonical-multiple series on minimal general type (k2 >= 1):
// q^{-ell*k2} * (-1)^{chi*ell} * G_{N,ell} with G from g_series(N, ell,
// k2 + 1). ell outside [0, N] is a forced vanishing.
ZSeries z_gentype(int N, int ell, long k2, long chi);

// Blow-up transform q^ell * bl(N, ell) * z; ell outside [0, N] gives the
// zero series (the invariants vanish there).
QRatFun z_blowup(const QRatFun& z, int N, int ell);

// Dispatches the minimal-model series for (spec, class), then folds one
// z_blowup per blow-up step. Raises UnsupportedGeometry for combinations
// outside the resolved cases.
ZSeries assemble(const SurfaceSpec& spec, int N, const ClassDescriptor& cls);

const char* surface_kind_name(SurfaceKind kind);

}  // namespace quotgen
