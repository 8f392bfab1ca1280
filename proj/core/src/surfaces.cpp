#include "quotgen/surfaces.hpp"

#include <sstream>
#include <utility>

#include "quotgen/closedforms.hpp"
#include "quotgen/combinat.hpp"

namespace quotgen {

namespace {

void validate_mults(const std::vector<long>& mults) {
  for (long m : mults)
    if (m < 2) raise(Errc::InvalidArgument, "fiber multiplicities must be at least 2");
}

long mults_lcm(const std::vector<long>& mults) {
  long l = 1;
  for (long m : mults) l = lcm_long(l, m);
  return l;
}

// Number of tuples (a_1..a_r), 0 <= a_j < mults[j], with
// sum a_j * units[j] = t.
long count_fraction_tuples(const std::vector<long>& units, const std::vector<long>& mults,
                           size_t j, long t) {
  if (t < 0) return 0;
  if (j == units.size()) return t == 0 ? 1 : 0;
  long ways = 0;
  for (long a = 0; a < mults[j]; ++a)
    ways += count_fraction_tuples(units, mults, j + 1, t - a * units[j]);
  return ways;
}

// The class c, scaled to integer units of 1/lcm; absent when the
// denominator is incompatible or c is negative.
bool scale_class(const BigRat& c, long lcm, long& t) {
  if (c.is_negative()) return false;
  const BigRat scaled = c * BigRat(lcm);
  if (!scaled.is_integer()) return false;
  t = scaled.to_long();
  return true;
}

QRatFun constant_series(const BigRat& v) {
  return QRatFun::constant(YRat(YPoly::constant(v)));
}

}  // namespace

ClassDescriptor ClassDescriptor::canonical(int ell) {
  ClassDescriptor d;
  d.kind = Kind::canonical_multiple;
  d.ell = ell;
  return d;
}

ClassDescriptor ClassDescriptor::fiber(BigRat c) {
  ClassDescriptor d;
  d.kind = Kind::fiber;
  d.c = std::move(c);
  return d;
}

SWValue sw_fiber(const BigRat& c, long chi, long base_genus, const std::vector<long>& mults) {
  validate_mults(mults);
  const long lcm = mults_lcm(mults);
  long t = 0;
  if (!scale_class(c, lcm, t)) return SWValue{BigRat(0), false};

  std::vector<long> units;
  units.reserve(mults.size());
  for (long m : mults) units.push_back(lcm / m);

  const long n = 2 * base_genus - 2 + chi;
  BigRat acc;
  for (long d = 0; d * lcm <= t; ++d) {
    const long ways = count_fraction_tuples(units, mults, 0, t - d * lcm);
    if (ways == 0) continue;
    BigRat term = binomial_falling(n, d) * BigRat(ways);
    if (d % 2) term = -term;
    acc += term;
  }
  return SWValue{acc, true};
}

SWValue z_elliptic(int N, const BigRat& c, long chi, long base_genus,
                   const std::vector<long>& mults) {
  if (N < 1) raise(Errc::InvalidArgument, "fiber-class series requires N >= 1");
  validate_mults(mults);
  const long lcm = mults_lcm(mults);
  long t = 0;
  if (!scale_class(c, lcm, t)) return SWValue{BigRat(0), false};
  if (t > 1000000) raise(Errc::InvalidArgument, "fiber class too large to enumerate");

  std::vector<BigRat> sw(static_cast<size_t>(t) + 1);
  for (long k = 0; k <= t; ++k)
    sw[static_cast<size_t>(k)] = sw_fiber(BigRat(k, lcm), chi, base_genus, mults).value;

  BigRat acc;
  for (const auto& parts : compositions_of(static_cast<int>(t), N)) {
    BigRat prod(1);
    for (int k : parts) {
      prod *= sw[static_cast<size_t>(k)];
      if (prod.is_zero()) break;
    }
    acc += prod;
  }
  return SWValue{acc, true};
}

QRatFun z_punctual(int N, long k2) {
  if (N < 1) raise(Errc::InvalidArgument, "punctual series requires N >= 1");
  return ubar(N).pow(k2);
}

ZSeries z_gentype(int N, int ell, long k2, long chi) {
  if (N < 1) raise(Errc::InvalidArgument, "general-type series requires N >= 1");
  if (k2 < 1)
    raise(Errc::InvalidArgument, "general-type series requires K^2 >= 1 on the minimal model");
  ZSeries out;
  if (ell < 0 || ell > N) {
    out.series = QRatFun::zero();
    out.vanishing = true;
    out.trace.push_back("canonical multiple outside 0..N: invariants vanish");
    return out;
  }
  out.series = QRatFun::monomial(Var::q, -static_cast<long>(ell) * k2) * g_series(N, ell, k2 + 1);
  if ((static_cast<long>(ell) * chi) % 2 != 0) out.series = -out.series;
  std::ostringstream os;
  os << "general type: q^{-ell K2} SW(K)^ell G_{N,ell} with ell = " << ell << ", K2 = " << k2
     << ", SW(K) = " << ((ell * chi) % 2 != 0 ? "-1" : "+1");
  out.trace.push_back(os.str());
  return out;
}

QRatFun z_blowup(const QRatFun& z, int N, int ell) {
  if (N < 1) raise(Errc::InvalidArgument, "blow-up transform requires N >= 1");
  if (ell < 0 || ell > N) return QRatFun::zero(z.var());
  return QRatFun::monomial(z.var(), ell) * bl(N, ell) * z;
}

const char* surface_kind_name(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::abstract_surface: return "abstract";
    case SurfaceKind::elliptic: return "elliptic";
    case SurfaceKind::general_type: return "general_type";
    case SurfaceKind::k3: return "k3";
    case SurfaceKind::abelian: return "abelian";
  }
  return "unknown";
}

ZSeries assemble(const SurfaceSpec& spec, int N, const ClassDescriptor& cls) {
  if (N < 1) raise(Errc::InvalidArgument, "assembly requires N >= 1");
  validate_mults(spec.mults);
  const bool trivial_canonical =
      spec.kind == SurfaceKind::k3 || spec.kind == SurfaceKind::abelian;
  const bool fibration_minimal = spec.kind == SurfaceKind::elliptic;
  if ((trivial_canonical || fibration_minimal) && spec.k2 != 0)
    raise(Errc::InvalidArgument, "this surface kind has K^2 = 0 on its minimal model");
  if (spec.kind == SurfaceKind::general_type && spec.k2 < 1)
    raise(Errc::InvalidArgument, "minimal general type requires K^2 >= 1");

  ZSeries out;
  auto emit_punctual = [&]() {
    out.series = z_punctual(N, spec.k2);
    std::ostringstream os;
    os << "punctual class on minimal " << surface_kind_name(spec.kind)
       << ": Z = ubar(N)^{K2}, K2 = " << spec.k2;
    out.trace.push_back(os.str());
  };
  switch (cls.kind) {
    case ClassDescriptor::Kind::punctual: {
      emit_punctual();
      break;
    }
    case ClassDescriptor::Kind::canonical_multiple: {
      if (spec.kind != SurfaceKind::general_type) {
        if (cls.ell != 0)
          raise(Errc::UnsupportedGeometry,
                "canonical multiples are resolved only on minimal general type");
        out.trace.push_back("0-multiple of the canonical class: punctual case");
        emit_punctual();
        break;
      }
      out = z_gentype(N, cls.ell, spec.k2, spec.chi);
      break;
    }
    case ClassDescriptor::Kind::fiber: {
      if (spec.kind != SurfaceKind::elliptic)
        raise(Errc::UnsupportedGeometry, "fiber classes require an elliptic fibration");
      const SWValue v = z_elliptic(N, cls.c, spec.chi, spec.base_genus, spec.mults);
      out.series = constant_series(v.value);
      if (!v.representable) {
        out.vanishing = true;
        out.trace.push_back("class is not supported on the fibers: invariants vanish");
      } else {
        std::ostringstream os;
        os << "elliptic fiber class c = " << cls.c.str()
           << ": Z = sum of SW products over ordered decompositions";
        out.trace.push_back(os.str());
      }
      break;
    }
  }

  for (const auto& step : spec.blowups) {
    out.series = z_blowup(out.series, N, step.ell);
    std::ostringstream bs;
    if (step.ell < 0 || step.ell > N) {
      out.vanishing = true;
      bs << "blow-up with exceptional multiple " << step.ell << " outside 0..N: invariants vanish";
    } else {
      bs << "blow-up: Z -> q^ell Bl_{N,ell} Z with ell = " << step.ell;
    }
    out.trace.push_back(bs.str());
  }
  return out;
}

}  // namespace quotgen
