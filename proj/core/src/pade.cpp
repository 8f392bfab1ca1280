#include "quotgen/pade.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace quotgen {

namespace {

struct DenSolve {
  std::vector<YRat> b;  // b[0] = 1
  bool rank_deficient = false;
};

// Solves for denominator coefficients b_1..b_dd from the homogeneous tail
// equations sum_k b_k s_{n-k} = 0, n = deg_num+1 .. M. Returns nothing when
// the system is inconsistent; free variables are set to zero.
std::optional<DenSolve> solve_denominator(const QSeries<YRat>& s, long deg_num, long dd) {
  const long M = s.trunc();
  const long rows = M - deg_num;
  auto sc = [&s](long n) { return n < 0 ? YRat() : s.coeff(n); };

  std::vector<std::vector<YRat>> a(static_cast<size_t>(rows));
  std::vector<YRat> rhs(static_cast<size_t>(rows));
  for (long r = 0; r < rows; ++r) {
    const long n = deg_num + 1 + r;
    auto& row = a[static_cast<size_t>(r)];
    row.resize(static_cast<size_t>(dd));
    for (long k = 1; k <= dd; ++k) row[static_cast<size_t>(k - 1)] = sc(n - k);
    rhs[static_cast<size_t>(r)] = -sc(n);
  }

  // Gauss-Jordan elimination with first-nonzero pivoting (deterministic).
  std::vector<long> pivot_of_col(static_cast<size_t>(dd), -1);
  long prow = 0;
  for (long c = 0; c < dd && prow < rows; ++c) {
    long sel = -1;
    for (long r = prow; r < rows; ++r) {
      if (!a[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(a[static_cast<size_t>(sel)], a[static_cast<size_t>(prow)]);
    std::swap(rhs[static_cast<size_t>(sel)], rhs[static_cast<size_t>(prow)]);
    const YRat inv = a[static_cast<size_t>(prow)][static_cast<size_t>(c)].inv();
    for (long j = c; j < dd; ++j) a[static_cast<size_t>(prow)][static_cast<size_t>(j)] *= inv;
    rhs[static_cast<size_t>(prow)] *= inv;
    for (long r = 0; r < rows; ++r) {
      if (r == prow) continue;
      const YRat f = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (f.is_zero()) continue;
      for (long j = c; j < dd; ++j)
        a[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
            f * a[static_cast<size_t>(prow)][static_cast<size_t>(j)];
      rhs[static_cast<size_t>(r)] -= f * rhs[static_cast<size_t>(prow)];
    }
    pivot_of_col[static_cast<size_t>(c)] = prow;
    ++prow;
  }
  for (long r = prow; r < rows; ++r)
    if (!rhs[static_cast<size_t>(r)].is_zero()) return std::nullopt;

  DenSolve out;
  out.b.resize(static_cast<size_t>(dd) + 1);
  out.b[0] = YRat::one();
  for (long c = 0; c < dd; ++c) {
    const long pr = pivot_of_col[static_cast<size_t>(c)];
    if (pr < 0) {
      out.rank_deficient = true;
      out.b[static_cast<size_t>(c) + 1] = YRat();
    } else {
      // With Gauss-Jordan the pivot row may still reference later free
      // columns; those are zero, so the pivot value is the rhs directly.
      out.b[static_cast<size_t>(c) + 1] = rhs[static_cast<size_t>(pr)];
    }
  }
  return out;
}

}  // namespace

PadeResult pade_reconstruct(const QSeries<YRat>& s, long deg_num, long deg_den) {
  if (deg_num < 0 || deg_den < 0) raise(Errc::InvalidArgument, "negative degree bound");
  const long M = s.trunc();
  if (M + 1 < deg_num + deg_den + 2)
    raise(Errc::InvalidArgument, "series too short for requested degrees: need at least " +
                                     std::to_string(deg_num + deg_den + 2) + " coefficients");

  for (long dd = 0; dd <= deg_den; ++dd) {
    auto sol = solve_denominator(s, deg_num, dd);
    if (!sol) continue;
    std::vector<YRat> pc(static_cast<size_t>(deg_num) + 1);
    for (long n = 0; n <= deg_num; ++n) {
      YRat acc;
      for (long k = 0; k <= std::min(n, dd); ++k)
        acc += sol->b[static_cast<size_t>(k)] * s.coeff(n - k);
      pc[static_cast<size_t>(n)] = acc;
    }
    QRatFun fun(s.var(), 0, Poly<YRat>(std::move(pc)),
                Poly<YRat>(std::vector<YRat>(sol->b.begin(), sol->b.end())));
    // Full verification against every known coefficient; elimination already
    // enforced this, the recheck guards the reconstruction itself.
    if (fun.series(M) != s) continue;
    PadeResult res;
    res.fun = std::move(fun);
    res.den_degree = dd;
    res.surplus_checked = M - deg_num - dd;
    res.rank_deficient = sol->rank_deficient;
    return res;
  }
  raise(Errc::NoSolution, "no rational function matches within the degree bounds");
}

}  // namespace quotgen
