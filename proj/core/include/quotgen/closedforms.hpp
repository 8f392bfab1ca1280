#pragma once

#include "quotgen/qratfun.hpp"
#include "quotgen/rootfield.hpp"

namespace quotgen {

// The q-polynomial P_N(q, y) entering the punctual series: the product over
// ordered pairs i != j of (1 - (1+y) t_i + y t_i t_j), where t_1, ..., t_N
// are the roots of s^N = q. Symmetric in the roots, hence a polynomial in q.
QRatFun pn(int N);

// Generating series of punctual invariants per unit of K^2:
// Ubar_N = (1-q)(1-y^N q) / (1 - (1+y)^N q)^N * P_N.
QRatFun ubar(int N);

// The subset term A_J attached to J inside the root field of s^N = q;
// indices in J are 1-based and distinct. Returned as a formal fraction so
// no root-field inversion is ever performed.
RootFrac aj_term(const std::shared_ptr<const RootCtx>& ctx, const std::vector<int>& J);

// Sum of A_J^e over all s-element subsets J of {1, ..., N}. Symmetric under
// the Galois action, so the result descends to a rational function of q, y.
QRatFun aj_power_sum(int N, int s, long e);

// Blow-up coefficient series: bl(N, ell) = sum over |J| = N - ell of A_J.
QRatFun bl(int N, int ell);

// Genus-weighted subset sums: g_series(N, ell, g) = sum of A_J^{1-g} over
// |J| = N - ell. The general-type series is assembled from these.
QRatFun g_series(int N, int ell, long g);

// The symmetry P_N(q, y) = (y^N q^2)^{N-1} P_N(1/q, 1/y), checked
// coefficientwise on a candidate polynomial (used with perturbed inputs).
bool functional_equation_holds(const QRatFun& p, int N);
// The same check applied to pn(N) itself.
bool functional_equation_check(int N);

}  // namespace quotgen
