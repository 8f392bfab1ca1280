#include "quotgen/rootfield.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace quotgen {

namespace {

std::mutex g_root_mutex;
std::map<int, std::shared_ptr<const RootCtx>> g_root_cache;

CyYRat cy_constant(CycloElem v) { return CyYRat(Poly<CycloElem>::constant(std::move(v))); }

RootCoef rc_constant(CyYRat v) { return RootCoef(Poly<CyYRat>::constant(std::move(v))); }

}  // namespace

std::shared_ptr<const RootCtx> root_context(int n) {
  if (n < 1) raise(Errc::InvalidArgument, "root field index must be positive");
  std::lock_guard<std::mutex> lock(g_root_mutex);
  auto it = g_root_cache.find(n);
  if (it != g_root_cache.end()) return it->second;
  auto ctx = std::make_shared<RootCtx>();
  ctx->n = n;
  ctx->cyc = n >= 2 ? cyclo_context(n) : nullptr;
  g_root_cache.emplace(n, ctx);
  return ctx;
}

RootElem::RootElem(std::shared_ptr<const RootCtx> ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) raise(Errc::InvalidArgument, "root element without context");
  c_.assign(static_cast<size_t>(ctx_->n), RootCoef());
}

RootElem::RootElem(std::shared_ptr<const RootCtx> ctx, std::vector<RootCoef> coords)
    : ctx_(std::move(ctx)), c_(std::move(coords)) {
  if (!ctx_) raise(Errc::InvalidArgument, "root element without context");
  if (c_.size() != static_cast<size_t>(ctx_->n))
    raise(Errc::InvalidArgument, "root element coordinate count mismatch");
}

RootElem RootElem::one(const std::shared_ptr<const RootCtx>& ctx) {
  return constant(ctx, RootCoef::one());
}

RootElem RootElem::constant(const std::shared_ptr<const RootCtx>& ctx, RootCoef c) {
  RootElem r(ctx);
  r.c_[0] = std::move(c);
  return r;
}

RootElem RootElem::from_yrat(const std::shared_ptr<const RootCtx>& ctx, const YRat& v) {
  return constant(ctx, rc_from_yrat(v));
}

RootElem RootElem::from_int(const std::shared_ptr<const RootCtx>& ctx, long v) {
  return constant(ctx, RootCoef::from_int(v));
}

RootElem RootElem::s(const std::shared_ptr<const RootCtx>& ctx) {
  RootElem r(ctx);
  if (ctx->n == 1) {
    r.c_[0] = RootCoef::x();  // s = q when N = 1
  } else {
    r.c_[1] = RootCoef::one();
  }
  return r;
}

RootElem RootElem::t(const std::shared_ptr<const RootCtx>& ctx, int i) {
  if (i < 1 || i > ctx->n) raise(Errc::InvalidArgument, "root index out of range");
  RootElem r = s(ctx);
  if (ctx->n >= 2 && i > 1) {
    const CycloElem zk = CycloElem::zeta(ctx->cyc).pow(i - 1);
    r.c_[1] = r.c_[1] * rc_constant(cy_constant(zk));
  }
  return r;
}

RootElem RootElem::q(const std::shared_ptr<const RootCtx>& ctx) {
  return constant(ctx, RootCoef::x());
}

bool RootElem::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool RootElem::is_constant() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

void RootElem::check_same_ctx(const RootElem& o) const {
  if (ctx_ != o.ctx_) raise(Errc::VariableMismatch, "root elements from different fields");
}

RootElem RootElem::operator-() const {
  RootElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

RootElem operator+(const RootElem& a, const RootElem& b) {
  a.check_same_ctx(b);
  RootElem r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

RootElem operator-(const RootElem& a, const RootElem& b) { return a + (-b); }

RootElem operator*(const RootElem& a, const RootElem& b) {
  a.check_same_ctx(b);
  const int n = a.ctx_->n;
  RootElem r(a.ctx_);
  const RootCoef qv = RootCoef::x();
  for (int i = 0; i < n; ++i) {
    if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b.c_[static_cast<size_t>(j)].is_zero()) continue;
      RootCoef prod = a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
      int e = i + j;
      if (e >= n) {
        e -= n;
        prod *= qv;  // s^N folds to q
      }
      r.c_[static_cast<size_t>(e)] += prod;
    }
  }
  return r;
}

RootElem operator/(const RootElem& a, const RootElem& b) { return a * b.inv(); }

RootElem RootElem::conj(int k) const {
  const int n = ctx_->n;
  if (n == 1) return *this;
  RootElem r(ctx_);
  const CycloElem zeta = CycloElem::zeta(ctx_->cyc);
  for (int i = 0; i < n; ++i) {
    if (c_[static_cast<size_t>(i)].is_zero()) continue;
    const CycloElem zk = zeta.pow(static_cast<long>(i) * k % n);
    r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] * rc_constant(cy_constant(zk));
  }
  return r;
}

RootElem RootElem::inv() const {
  if (is_zero()) raise(Errc::DivisionByZero, "inverse of zero root element");
  const int n = ctx_->n;
  if (is_constant()) {
    RootElem r(ctx_);
    r.c_[0] = c_[0].inv();
    return r;
  }
  // Kummer extension: the Galois group permutes s -> zeta^k s, so the
  // product of the conjugates sigma_1(P) ... sigma_{N-1}(P) times P is the
  // norm, a scalar of the base field. Inversion then costs polynomial
  // multiplications plus one base-field division.
  RootElem adj = conj(1);
  for (int k = 2; k < n; ++k) adj *= conj(k);
  const RootElem norm = *this * adj;
  for (size_t i = 1; i < norm.c_.size(); ++i) {
    if (!norm.c_[i].is_zero())
      raise(Errc::NotInvertible, "norm of root element failed to collapse");
  }
  if (norm.c_[0].is_zero()) raise(Errc::NotInvertible, "root element has zero norm");
  const RootCoef scale = norm.c_[0].inv();
  for (auto& c : adj.c_) c *= scale;
  return adj;
}

RootElem RootElem::pow(long e) const {
  if (e == 0) return one(ctx_);
  RootElem base = e > 0 ? *this : inv();
  unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  RootElem r = one(ctx_);
  while (true) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k == 0) break;
    base *= base;
  }
  return r;
}

bool operator==(const RootElem& a, const RootElem& b) {
  if (a.ctx_ != b.ctx_) return false;
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

QRatFun RootElem::descend() const {
  if (!is_constant())
    raise(Errc::NotGaloisInvariant, "root element depends on the root s");
  const RootCoef& v = c_[0];
  auto lower = [](const Poly<CyYRat>& p) {
    std::vector<YRat> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(descend_to_rational(c));
    return Poly<YRat>(std::move(out));
  };
  return QRatFun(Var::q, 0, lower(v.num()), lower(v.den()));
}

RootFrac::RootFrac(RootElem num, RootElem den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.ctx() != den_.ctx()) raise(Errc::VariableMismatch, "fraction parts from different fields");
  if (den_.is_zero()) raise(Errc::DivisionByZero, "root fraction with zero denominator");
}

RootFrac RootFrac::from_elem(RootElem e) {
  auto ctx = e.ctx();
  return RootFrac(std::move(e), RootElem::one(ctx));
}

RootFrac RootFrac::zero(const std::shared_ptr<const RootCtx>& ctx) {
  return RootFrac(RootElem::zero(ctx), RootElem::one(ctx));
}

RootFrac RootFrac::one(const std::shared_ptr<const RootCtx>& ctx) {
  return RootFrac(RootElem::one(ctx), RootElem::one(ctx));
}

RootFrac operator+(const RootFrac& a, const RootFrac& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return RootFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RootFrac operator-(const RootFrac& a, const RootFrac& b) {
  return a + RootFrac(-b.num_, b.den_);
}

RootFrac operator*(const RootFrac& a, const RootFrac& b) {
  return RootFrac(a.num_ * b.num_, a.den_ * b.den_);
}

RootFrac operator/(const RootFrac& a, const RootFrac& b) { return a * b.inv(); }

RootFrac RootFrac::inv() const {
  if (is_zero()) raise(Errc::DivisionByZero, "inverse of zero root fraction");
  return RootFrac(den_, num_);
}

RootFrac RootFrac::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  return RootFrac(num_.pow(e), den_.pow(e));
}

QRatFun RootFrac::descend() const { return num_.descend() / den_.descend(); }

CyYRat cy_from_yrat(const YRat& v) {
  auto lift = [](const YPoly& p) {
    std::vector<CycloElem> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return Poly<CycloElem>(std::move(out));
  };
  return CyYRat(lift(v.num()), lift(v.den()));
}

RootCoef rc_from_yrat(const YRat& v) { return rc_constant(cy_from_yrat(v)); }

}  // namespace quotgen
