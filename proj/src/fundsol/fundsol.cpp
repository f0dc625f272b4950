#include "tricomi/fundsol.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "tricomi/error.hpp"

namespace tricomi::fundsol {

namespace {

using geometry::RegionTag;
using specfun::CutSide;

constexpr double kPi = std::numbers::pi;
const cplx kPhase = std::polar(1.0, kPi / 6.0);  // e^{i pi/6}
const double kCbrt2 = std::cbrt(2.0);         // 2^{1/3}

// w^{-1/6} with arg w = -pi for w < 0.
cplx inv_sixth_root(double w) {
  if (w > 0.0) return std::pow(w, -1.0 / 6.0);
  return std::pow(-w, -1.0 / 6.0) * kPhase;
}

struct NameEntry {
  std::string_view name;
  SolutionKind kind;
};

constexpr std::array<NameEntry, 12> kNames{{
    {"E", SolutionKind::Eraw},
    {"EI", SolutionKind::EI},
    {"EII", SolutionKind::EII},
    {"EIII", SolutionKind::EIII},
    {"EIV", SolutionKind::EIV},
    {"ESHARP", SolutionKind::ESharp},
    {"ECONJ", SolutionKind::EConj},
    {"EREAL", SolutionKind::EReal},
    {"FPLUS", SolutionKind::FPlus},
    {"FMINUS", SolutionKind::FMinus},
    {"RIEMANNR", SolutionKind::RiemannR},
    {"HOMOGENEOUSU", SolutionKind::HomogeneousU},
}};

bool is_origin_kind(SolutionKind k) { return k == SolutionKind::FPlus || k == SolutionKind::FMinus; }

void require_source(const Source& s, SolutionKind kind) {
  if (!(s.l0 > 0.0))
    fail(ErrorCode::Domain,
         fmt::format("{} requires a source with b < 0 (got b = {})", kind_name(kind), s.b));
}

}  // namespace

std::string_view kind_name(SolutionKind kind) {
  for (const auto& e : kNames)
    if (e.kind == kind) return e.name;
  return "UNKNOWN";
}

std::optional<SolutionKind> kind_from_name(std::string_view name) {
  std::string upper(name);
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (upper == "ERAW") return SolutionKind::Eraw;
  for (const auto& e : kNames)
    if (e.name == upper) return e.kind;
  return std::nullopt;
}

SharpCoeffs sharp_coeffs() {
  // lambda + mu = 1 and lambda e^{i pi/6} + mu e^{-i pi/6} = -1/sqrt(3).
  const cplx lambda(0.5, 5.0 / (2.0 * std::sqrt(3.0)));
  return {lambda, std::conj(lambda)};
}

double f16_at_one() { return specfun::f_at_one(specfun::kF16Params); }
double c_plus() { return -f16_at_one() / (kCbrt2 * std::sqrt(3.0)); }
double c_minus() { return f16_at_one() / kCbrt2; }

cplx eval_E_general(double l, double m, double l0, double m0, CutSide side) {
  const double w1 = l - m0;
  const double w2 = l0 - m;
  if (w1 == 0.0 || w2 == 0.0)
    fail(ErrorCode::SingularLocus, "eval_E_general: power base vanishes");
  const double zeta = (l - l0) * (m - m0) / (w1 * (m - l0));
  return inv_sixth_root(w1) * inv_sixth_root(w2) * specfun::f16(zeta, side);
}

double riemann_R(double l, double m, double l0, double m0) {
  if (!(l > m)) fail(ErrorCode::Domain, "riemann_R: requires l > m");
  const cplx e = eval_E_general(l, m, l0, m0);
  if (std::abs(e.imag()) > 1e-12 * std::abs(e))
    fail(ErrorCode::Domain, "riemann_R: point outside the region where E is real");
  return std::cbrt(l - m) * e.real();
}

cplx eval_E_char(CharPoint q, const Source& s) {
  const double z = (q.l + s.l0) * (q.m - s.l0);
  if (z == 0.0) fail(ErrorCode::SingularLocus, "E: point on a reflected characteristic");
  const double zeta = (q.l - s.l0) * (q.m + s.l0) / z;
  if (z < 0.0) return std::pow(-z, -1.0 / 6.0) * specfun::f16(zeta);
  return kPhase * std::pow(z, -1.0 / 6.0) * specfun::f16(zeta, CutSide::Above);
}

EGrad eval_E_char_grad(CharPoint q, const Source& s) {
  const double l0 = s.l0;
  const double z = (q.l + l0) * (q.m - l0);
  if (z == 0.0) fail(ErrorCode::SingularLocus, "E: point on a reflected characteristic");
  const double zeta = (q.l - l0) * (q.m + l0) / z;
  const cplx pref = z < 0.0 ? cplx(std::pow(-z, -1.0 / 6.0)) : kPhase * std::pow(z, -1.0 / 6.0);
  const cplx f = specfun::f16(zeta, CutSide::Above);
  const cplx fp = specfun::f76(zeta, CutSide::Above) / 36.0;
  const double zeta_l = 2.0 * l0 * (q.m + l0) / ((q.l + l0) * (q.l + l0) * (q.m - l0));
  const double zeta_m = -2.0 * l0 * (q.l - l0) / ((q.l + l0) * (q.m - l0) * (q.m - l0));
  const cplx p_l = -pref / (6.0 * (q.l + l0));
  const cplx p_m = pref / (6.0 * (l0 - q.m));
  return {pref * f, p_l * f + pref * fp * zeta_l, p_m * f + pref * fp * zeta_m};
}

EPhysGrad eval_E_phys_grad(PhysPoint p, const Source& s) {
  if (!(p.y < 0.0)) fail(ErrorCode::Domain, "E gradient: requires y < 0");
  const EGrad g = eval_E_char_grad(geometry::to_char(p), s);
  const double r = std::sqrt(-p.y);
  return {g.e, 3.0 * (g.e_l + g.e_m), -3.0 * r * (g.e_l - g.e_m)};
}

cplx eval_E_phys(PhysPoint p, const Source& s) {
  if (p.y <= 0.0) return eval_E_char(geometry::to_char(p), s);
  const geometry::BranchData bd = geometry::branch_data(p, s);
  const cplx zinv = std::pow(bd.rho, -1.0 / 6.0) * std::polar(1.0, -bd.theta / 6.0);
  return kPhase * zinv * specfun::f16(std::polar(1.0, -2.0 * bd.theta));
}

std::uint8_t support_mask(SolutionKind kind) {
  using namespace geometry;
  switch (kind) {
    case SolutionKind::EI: return kBitDI;
    case SolutionKind::EIII: return kBitDIII;
    case SolutionKind::EIV: return kBitDIV;
    case SolutionKind::EII:
    case SolutionKind::ESharp:
    case SolutionKind::EConj:
    case SolutionKind::EReal: return kBitDII;
    case SolutionKind::FPlus: return kBitDPlus;
    case SolutionKind::FMinus: return kBitDMinus;
    case SolutionKind::Eraw:
    case SolutionKind::RiemannR:
    case SolutionKind::HomogeneousU: return kBitDI | kBitDII | kBitDIII | kBitDIV;
  }
  return 0;
}

cplx apply_kind(SolutionKind kind, cplx e) {
  switch (kind) {
    case SolutionKind::EI:
    case SolutionKind::EII: return e / kCbrt2;
    case SolutionKind::EIII:
    case SolutionKind::EIV: return -e / kCbrt2;
    case SolutionKind::ESharp: return 2.0 * (sharp_coeffs().lambda * e / kCbrt2).real();
    case SolutionKind::EConj: return std::conj(e) / kCbrt2;
    case SolutionKind::EReal: return (e / kCbrt2).real();
    default: return e;
  }
}

double homogeneous_u(double l, double m) {
  if (!(l > 0.0) || !(m / l < 1.0))
    fail(ErrorCode::Domain, fmt::format("homogeneous_u: requires l > 0 and m/l < 1 (l={}, m={})", l, m));
  return std::pow(l, -1.0 / 6.0) * specfun::f16(m / l).real();
}

double f_plus(PhysPoint p) {
  const double d = geometry::origin_discriminant(p);
  return d > 0.0 ? c_plus() * std::pow(d, -1.0 / 6.0) : 0.0;
}

double f_minus(PhysPoint p) {
  const double d = geometry::origin_discriminant(p);
  return d < 0.0 ? c_minus() * std::pow(-d, -1.0 / 6.0) : 0.0;
}

Evaluation eval_solution(SolutionKind kind, PhysPoint p, const Source& s) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y))
    fail(ErrorCode::InvalidArgument, "eval_solution: non-finite point");

  if (is_origin_kind(kind)) {
    const Source origin = geometry::source_from_b(0.0);
    const Region region = geometry::classify(p, origin);
    const std::uint8_t support = support_mask(kind);
    if (!(region.adjacent & support)) return {0.0, region};
    if (region.tag == RegionTag::OnOriginCharacteristic)
      fail(ErrorCode::SingularLocus,
           fmt::format("{} is singular on the characteristics through the origin", kind_name(kind)));
    return {kind == SolutionKind::FPlus ? f_plus(p) : f_minus(p), region};
  }

  require_source(s, kind);
  const Region region = geometry::classify(p, s);

  if (kind == SolutionKind::RiemannR || kind == SolutionKind::HomogeneousU) {
    if (p.y > 0.0) fail(ErrorCode::Domain, fmt::format("{} is defined on y <= 0", kind_name(kind)));
    const CharPoint q = geometry::to_char(p);
    if (kind == SolutionKind::RiemannR) return {riemann_R(q.l, q.m, s.l0, -s.l0), region};
    return {homogeneous_u(q.l, q.m), region};
  }

  const std::uint8_t support = support_mask(kind);
  if (!(region.adjacent & support)) return {0.0, region};
  if (region.tag == RegionTag::OnReflectedCharacteristic)
    fail(ErrorCode::SingularLocus,
         fmt::format("{} is singular on the reflected characteristics", kind_name(kind)));
  return {apply_kind(kind, eval_E_phys(p, s)), region};
}

}  // namespace tricomi::fundsol
