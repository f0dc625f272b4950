#include "tricomi/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "tricomi/error.hpp"

namespace tricomi::geometry {

namespace {

// Bands along one characteristic coordinate: below -l0, between, above l0.
constexpr std::uint8_t kLow = 1u << 0;
constexpr std::uint8_t kMid = 1u << 1;
constexpr std::uint8_t kHigh = 1u << 2;

std::uint8_t bands(double v, double l0, double tol) {
  std::uint8_t mask = 0;
  if (v < -l0 + tol) mask |= kLow;
  if (v > -l0 - tol && v < l0 + tol) mask |= kMid;
  if (v > l0 - tol) mask |= kHigh;
  return mask;
}

std::uint8_t region_of_bands(std::uint8_t lb, std::uint8_t mb) {
  if (lb == kHigh && mb == kLow) return kBitDI;
  if (lb == kHigh && mb == kMid) return kBitDIII;
  if (lb == kMid && mb == kLow) return kBitDIV;
  if ((lb == kHigh && mb == kHigh) || (lb == kMid && mb == kMid) || (lb == kLow && mb == kLow))
    return kBitDII;
  return 0;  // l < m: not a point of y <= 0
}

RegionTag tag_of_bit(std::uint8_t bit) {
  switch (bit) {
    case kBitDI: return RegionTag::DI;
    case kBitDIII: return RegionTag::DIII;
    case kBitDIV: return RegionTag::DIV;
    default: return RegionTag::DII;
  }
}

Region classify_origin(PhysPoint p, double eps) {
  if (p.y > eps) return {RegionTag::DPlus, kBitDPlus};
  const double yy = std::min(p.y, 0.0);
  const CharPoint q = to_char({p.x, yy});
  const double tol = eps * 3.0 * std::sqrt(1.0 + std::abs(yy));
  if (std::abs(q.l) <= tol || std::abs(q.m) <= tol)
    return {RegionTag::OnOriginCharacteristic, static_cast<std::uint8_t>(kBitDPlus | kBitDMinus)};
  return origin_discriminant(p) > 0.0 ? Region{RegionTag::DPlus, kBitDPlus}
                                      : Region{RegionTag::DMinus, kBitDMinus};
}

}  // namespace

std::string_view region_name(RegionTag tag) {
  switch (tag) {
    case RegionTag::DI: return "DI";
    case RegionTag::DII: return "DII";
    case RegionTag::DIII: return "DIII";
    case RegionTag::DIV: return "DIV";
    case RegionTag::OnSourceCharacteristic: return "OnSourceCharacteristic";
    case RegionTag::OnReflectedCharacteristic: return "OnReflectedCharacteristic";
    case RegionTag::OnAxis: return "OnAxis";
    case RegionTag::DPlus: return "DPlus";
    case RegionTag::DMinus: return "DMinus";
    case RegionTag::OnOriginCharacteristic: return "OnOriginCharacteristic";
  }
  return "Unknown";
}

bool is_interior(RegionTag tag) { return region_bit(tag) != 0; }

std::uint8_t region_bit(RegionTag tag) {
  switch (tag) {
    case RegionTag::DI: return kBitDI;
    case RegionTag::DII: return kBitDII;
    case RegionTag::DIII: return kBitDIII;
    case RegionTag::DIV: return kBitDIV;
    case RegionTag::DPlus: return kBitDPlus;
    case RegionTag::DMinus: return kBitDMinus;
    default: return 0;
  }
}

RegionTag mirror(RegionTag tag) {
  if (tag == RegionTag::DIII) return RegionTag::DIV;
  if (tag == RegionTag::DIV) return RegionTag::DIII;
  return tag;
}

CharPoint to_char(PhysPoint p) {
  if (!(p.y <= 0.0)) fail(ErrorCode::Domain, fmt::format("to_char: y = {} is not <= 0", p.y));
  const double s = 2.0 * std::pow(-p.y, 1.5);
  return {3.0 * p.x + s, 3.0 * p.x - s};
}

PhysPoint from_char(CharPoint q) {
  if (!(q.l >= q.m)) fail(ErrorCode::Domain, fmt::format("from_char: l = {} < m = {}", q.l, q.m));
  return {(q.l + q.m) / 6.0, -std::cbrt(((q.l - q.m) / 4.0) * ((q.l - q.m) / 4.0))};
}

Source source_from_b(double b) {
  if (!std::isfinite(b) || b > 0.0)
    fail(ErrorCode::Domain, fmt::format("source_from_b: b = {} must be finite and <= 0", b));
  const double l0 = 2.0 * std::pow(-b, 1.5);
  return {b, l0 / 3.0, l0};
}

double default_eps(const Source& s) { return 1e-9 * (1.0 + std::abs(s.l0)); }

Region classify(PhysPoint p, const Source& s, double eps) {
  if (eps < 0.0) eps = default_eps(s);
  if (s.l0 == 0.0) return classify_origin(p, eps);
  if (p.y > eps) return {RegionTag::DII, kBitDII};

  const double yy = std::min(p.y, 0.0);
  const CharPoint q = to_char({p.x, yy});
  const double tol = eps * 3.0 * std::sqrt(1.0 + std::abs(yy));
  const double l0 = s.l0;

  const bool near_axis = std::abs(p.y) <= eps;
  const bool reflected = (std::abs(q.m - l0) <= tol && q.l >= l0 - tol) ||
                         (std::abs(q.l + l0) <= tol && q.m <= -l0 + tol);
  const bool source_char = std::abs(q.l - l0) <= tol || std::abs(q.m + l0) <= tol;

  const std::uint8_t lb = bands(q.l, l0, tol);
  const std::uint8_t mb = bands(q.m, l0, tol);
  std::uint8_t adjacent = near_axis ? kBitDII : 0;
  for (std::uint8_t li : {kLow, kMid, kHigh})
    for (std::uint8_t mi : {kLow, kMid, kHigh})
      if ((lb & li) && (mb & mi)) adjacent |= region_of_bands(li, mi);

  if (reflected) return {RegionTag::OnReflectedCharacteristic, adjacent};
  if (source_char) return {RegionTag::OnSourceCharacteristic, adjacent};
  if (near_axis) return {RegionTag::OnAxis, adjacent};
  return {tag_of_bit(adjacent), adjacent};
}

BranchData branch_data(PhysPoint p, const Source& s) {
  cplx z;
  if (p.y <= 0.0) {
    const CharPoint q = to_char(p);
    z = (q.l + s.l0) * (q.m - s.l0);
  } else {
    const double y15 = std::pow(p.y, 1.5);
    z = cplx(9.0 * (p.x * p.x - s.a * s.a) + 4.0 * p.y * p.y * p.y, 12.0 * s.a * y15);
  }
  if (z == cplx(0.0, 0.0))
    fail(ErrorCode::SingularLocus,
         fmt::format("branch_data: ({}, {}) lies on a reflected characteristic", p.x, p.y));
  const double rho = std::abs(z);
  double theta;
  if (z.imag() == 0.0)
    theta = z.real() > 0.0 ? 0.0 : std::numbers::pi;
  else
    theta = std::atan2(z.imag(), z.real());
  return {z, rho, theta};
}

double zeta_char(CharPoint q, const Source& s) {
  const double den = (q.l + s.l0) * (q.m - s.l0);
  if (den == 0.0) fail(ErrorCode::SingularLocus, "zeta: denominator vanishes on a reflected characteristic");
  return (q.l - s.l0) * (q.m + s.l0) / den;
}

cplx zeta(PhysPoint p, const Source& s) {
  if (p.y <= 0.0) return zeta_char(to_char(p), s);
  const BranchData bd = branch_data(p, s);
  return std::polar(1.0, -2.0 * bd.theta);
}

cplx zeta_physical(PhysPoint p, const Source& s) {
  const double base = 9.0 * (p.x * p.x - s.a * s.a) + 4.0 * p.y * p.y * p.y;
  // (-y)^{3/2} is real for y <= 0 and equals -i y^{3/2} for y > 0.
  const cplx t = p.y <= 0.0 ? cplx(std::pow(-p.y, 1.5), 0.0) : cplx(0.0, -std::pow(p.y, 1.5));
  const cplx num = base + 12.0 * s.a * t;
  const cplx den = base - 12.0 * s.a * t;
  if (den == cplx(0.0, 0.0)) fail(ErrorCode::SingularLocus, "zeta: denominator vanishes");
  return num / den;
}

double origin_discriminant(PhysPoint p) { return 9.0 * p.x * p.x + 4.0 * p.y * p.y * p.y; }

}  // namespace tricomi::geometry
