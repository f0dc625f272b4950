#include <algorithm>
#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "tricomi/error.hpp"
#include "tricomi/verify.hpp"

namespace tricomi::verify {

namespace {

// The b -> 0 limit of each family: F_- for EI, F_+ for ESharp, 0 for EIII/EIV.
std::optional<SolutionKind> limit_kind(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::EI: return SolutionKind::FMinus;
    case SolutionKind::ESharp: return SolutionKind::FPlus;
    case SolutionKind::EIII:
    case SolutionKind::EIV: return std::nullopt;
    default:
      fail(ErrorCode::InvalidArgument,
           fmt::format("limit study: no limit defined for {}", fundsol::kind_name(kind)));
  }
}

void require_negative(const std::vector<double>& bs) {
  for (double b : bs)
    if (!(b < 0.0)) fail(ErrorCode::InvalidArgument, "limit study: every b must be negative");
}

}  // namespace

std::vector<double> geometric_b_sequence(int k_first, int k_last) {
  if (k_last < k_first) fail(ErrorCode::InvalidArgument, "geometric_b_sequence: empty range");
  std::vector<double> bs;
  for (int k = k_first; k <= k_last; ++k) bs.push_back(-std::ldexp(1.0, -k));
  return bs;
}

std::vector<LimitSample> limit_study(SolutionKind kind, PhysPoint p, const std::vector<double>& bs) {
  const auto lk = limit_kind(kind);
  require_negative(bs);
  const Source origin = geometry::source_from_b(0.0);
  const cplx limit = lk ? fundsol::eval_solution(*lk, p, origin).value : cplx(0.0);
  std::vector<LimitSample> out;
  for (double b : bs) {
    const cplx v = fundsol::eval_solution(kind, p, geometry::source_from_b(b)).value;
    out.push_back({b, v, limit, std::abs(v - limit)});
  }
  return out;
}

std::vector<LimitSample> weak_limit_study(SolutionKind kind, const BumpSpec& bump,
                                          const std::vector<double>& bs, const QuadSpec& q) {
  const auto lk = limit_kind(kind);
  require_negative(bs);
  const Source origin = geometry::source_from_b(0.0);
  const cplx limit = lk ? pairing(*lk, origin, bump, q, TestWeight::Phi).value : cplx(0.0);
  std::vector<LimitSample> out;
  for (double b : bs) {
    const cplx v = pairing(kind, geometry::source_from_b(b), bump, q, TestWeight::Phi).value;
    out.push_back({b, v, limit, std::abs(v - limit)});
  }
  return out;
}

LogFit log_singularity_fit(const Source& s, PhysPoint base, PhysPoint normal, const std::vector<double>& distances) {
  if (distances.size() < 2) fail(ErrorCode::InvalidArgument, "log_singularity_fit: need two distances");
  const double nn = std::hypot(normal.x, normal.y);
  if (!(nn > 0.0)) fail(ErrorCode::InvalidArgument, "log_singularity_fit: zero normal");
  LogFit fit;
  fit.distances = distances;
  for (double d : distances) {
    const PhysPoint p{base.x - d * normal.x / nn, base.y - d * normal.y / nn};
    fit.magnitudes.push_back(std::abs(fundsol::eval_E_phys(p, s)));
  }
  for (std::size_t i = 0; i + 1 < distances.size(); ++i)
    fit.slopes.push_back((fit.magnitudes[i + 1] - fit.magnitudes[i]) /
                         (std::log(distances[i + 1]) - std::log(distances[i])));
  double lo = std::abs(fit.slopes.front());
  double hi = lo;
  for (double sl : fit.slopes) {
    lo = std::min(lo, std::abs(sl));
    hi = std::max(hi, std::abs(sl));
  }
  fit.spread = lo > 0.0 ? hi / lo - 1.0 : INFINITY;
  return fit;
}

}  // namespace tricomi::verify
