#include "quotgen/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "quotgen/errors.hpp"

namespace quotgen {

Poly<BigRat> cyclotomic_poly(int n) {
  if (n < 1) raise(Errc::InvalidArgument, "cyclotomic polynomial needs n >= 1");
  // x^n - 1
  Poly<BigRat> p = Poly<BigRat>::monomial(BigRat(1), n) - Poly<BigRat>::one();
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = exact_div(p, cyclotomic_poly(d));
  }
  return p;
}

std::shared_ptr<const CycloCtx> cyclo_context(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycloCtx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<CycloCtx>(CycloCtx{n, cyclotomic_poly(n)});
  cache.emplace(n, ctx);
  return ctx;
}

CycloElem::CycloElem(std::shared_ptr<const CycloCtx> ctx, Poly<BigRat> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
  reduce();
}

CycloElem CycloElem::zeta(const std::shared_ptr<const CycloCtx>& ctx) {
  if (!ctx) raise(Errc::InvalidArgument, "root of unity needs a cyclotomic context");
  return CycloElem(ctx, Poly<BigRat>::x());
}

void CycloElem::reduce() {
  if (ctx_ && coords_.degree() >= ctx_->phi.degree()) {
    coords_ = divrem(coords_, ctx_->phi).second;
  }
}

BigRat CycloElem::to_rational() const {
  if (!coords_.is_constant())
    raise(Errc::NotGaloisInvariant, "cyclotomic element is not rational");
  return coords_.coeff(0);
}

const CycloCtx* CycloElem::merge_ctx(const CycloElem& a, const CycloElem& b,
                                     std::shared_ptr<const CycloCtx>& out) {
  if (a.ctx_ && b.ctx_ && a.ctx_->n != b.ctx_->n)
    raise(Errc::VariableMismatch, "cyclotomic elements from different fields");
  out = a.ctx_ ? a.ctx_ : b.ctx_;
  return out.get();
}

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  r.coords_ = -r.coords_;
  return r;
}

CycloElem operator+(const CycloElem& a, const CycloElem& b) {
  CycloElem r;
  CycloElem::merge_ctx(a, b, r.ctx_);
  r.coords_ = a.coords_ + b.coords_;
  return r;
}

CycloElem operator-(const CycloElem& a, const CycloElem& b) {
  CycloElem r;
  CycloElem::merge_ctx(a, b, r.ctx_);
  r.coords_ = a.coords_ - b.coords_;
  return r;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  CycloElem r;
  CycloElem::merge_ctx(a, b, r.ctx_);
  r.coords_ = a.coords_ * b.coords_;
  r.reduce();
  return r;
}

CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * b.inv(); }

CycloElem CycloElem::inv() const {
  if (coords_.is_zero()) raise(Errc::DivisionByZero, "inverse of zero cyclotomic element");
  if (coords_.is_constant()) {
    CycloElem r = *this;
    r.coords_ = Poly<BigRat>::constant(coords_.coeff(0).inv());
    return r;
  }
  // phi is irreducible, so the extended Euclidean gcd with a nonzero
  // residue is 1 and the cofactor of coords is the inverse.
  auto eg = ext_gcd(coords_, ctx_->phi);
  if (eg.g.degree() != 0) raise(Errc::NotInvertible, "cyclotomic inverse failed");
  return CycloElem(ctx_, eg.u);
}

CycloElem CycloElem::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycloElem r = CycloElem::from_int(1);
  CycloElem base = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (true) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n == 0) break;
    base *= base;
  }
  return r;
}

CycloElem CycloElem::galois(long k) const {
  if (!ctx_) return *this;
  const long n = ctx_->n;
  long kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1)
    raise(Errc::InvalidArgument, "galois exponent not coprime to the conductor");
  CycloElem zk = zeta(ctx_).pow(kk);
  CycloElem r(BigRat(0));
  for (int e = 0; e <= coords_.degree(); ++e) {
    r += zk.pow(e) * CycloElem(coords_.coeff(e));
  }
  r.ctx_ = ctx_;
  return r;
}

bool operator==(const CycloElem& a, const CycloElem& b) {
  std::shared_ptr<const CycloCtx> ctx;
  CycloElem::merge_ctx(a, b, ctx);
  return a.coords_ == b.coords_;
}

std::string CycloElem::str() const {
  if (is_rational()) return coords_.is_zero() ? "0" : coords_.coeff(0).str();
  std::ostringstream os;
  bool first = true;
  for (int e = 0; e <= coords_.degree(); ++e) {
    const BigRat c = coords_.coeff(e);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    os << c.str();
    if (e > 0) os << "*w^" << e;
    first = false;
  }
  return os.str();
}

YRat descend_to_rational(const CyYRat& f) {
  auto conv = [](const Poly<CycloElem>& p) {
    std::vector<BigRat> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.to_rational());
    return Poly<BigRat>(std::move(out));
  };
  return YRat(conv(f.num()), conv(f.den()));
}

}  // namespace quotgen
