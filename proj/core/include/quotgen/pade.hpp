#pragma once

#include "quotgen/qratfun.hpp"
#include "quotgen/series.hpp"

namespace quotgen {

struct PadeResult {
  QRatFun fun;
  long den_degree = 0;       // minimal denominator degree that matched
  long surplus_checked = 0;  // equations satisfied beyond the determining set
  bool rank_deficient = false;
};

// Reconstructs the rational function P/Q with deg P <= deg_num,
// deg Q <= deg_den and Q(0) = 1 whose expansion matches every known
// coefficient of s. The denominator degree is minimized; all surplus
// coefficients act as checks and their count is reported. Requires
// s.trunc() + 1 >= deg_num + deg_den + 2 so at least one coefficient beyond
// the determining set is verified. Raises NoSolution when no admissible
// degree pair matches.
PadeResult pade_reconstruct(const QSeries<YRat>& s, long deg_num, long deg_den);

}  // namespace quotgen
