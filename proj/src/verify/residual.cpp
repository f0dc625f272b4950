#include <algorithm>
#include <cmath>

#include "tricomi/error.hpp"
#include "tricomi/verify.hpp"

namespace tricomi::verify {

namespace {

struct Stencil {
  cplx f, fu, fv, fuu, fvv, fuv;
};

Stencil central(const Field& field, double u, double v, double h) {
  const cplx c = field(u, v);
  const cplx up = field(u + h, v);
  const cplx um = field(u - h, v);
  const cplx vp = field(u, v + h);
  const cplx vm = field(u, v - h);
  const cplx pp = field(u + h, v + h);
  const cplx pm = field(u + h, v - h);
  const cplx mp = field(u - h, v + h);
  const cplx mm = field(u - h, v - h);
  const double h2 = h * h;
  return {c,
          (up - um) / (2.0 * h),
          (vp - vm) / (2.0 * h),
          (up - 2.0 * c + um) / h2,
          (vp - 2.0 * c + vm) / h2,
          (pp - pm - mp + mm) / (4.0 * h2)};
}

// Sums the terms and their magnitudes.
template <class... T>
std::pair<cplx, double> combine(T... terms) {
  return {(terms + ...), (std::abs(terms) + ...)};
}

}  // namespace

std::vector<ResidualSample> residual_scan(ResidualForm form, const Field& field,
                                          const std::vector<std::pair<double, double>>& points,
                                          double h, double length) {
  if (!(h > 0.0)) fail(ErrorCode::InvalidArgument, "residual_scan: h must be positive");
  if (!(length >= 0.0)) fail(ErrorCode::InvalidArgument, "residual_scan: length must be non-negative");
  std::vector<ResidualSample> out;
  out.reserve(points.size());
  for (const auto& [u, v] : points) {
    const Stencil d = central(field, u, v, h);
    std::pair<cplx, double> r;
    switch (form) {
      case ResidualForm::Thyp: {
        const double c = (1.0 / 6.0) / (u - v);
        r = combine(d.fuv, -c * d.fu, c * d.fv);
        break;
      }
      case ResidualForm::Tadjoint: {
        const double c = (1.0 / 6.0) / (u - v);
        const double k = (1.0 / 3.0) / ((u - v) * (u - v));
        r = combine(d.fuv, c * d.fu, -c * d.fv, -k * d.f);
        break;
      }
      case ResidualForm::Tphys:
        r = combine(v * d.fuu, d.fvv);
        break;
      case ResidualForm::Tell:
        if (!(v > 0.0)) fail(ErrorCode::Domain, "residual_scan: elliptic chart needs s > 0");
        r = combine(d.fuu, d.fvv, d.fv / (3.0 * v));
        break;
    }
    const double res = std::abs(r.first);
    const double scale = r.second + (length > 0.0 ? std::abs(d.f) / (length * length) : 0.0);
    out.push_back({u, v, res, scale, scale > 0.0 ? res / scale : 0.0});
  }
  return out;
}

double max_normalized(const std::vector<ResidualSample>& samples) {
  double worst = 0.0;
  for (const auto& s : samples) worst = std::max(worst, s.normalized);
  return worst;
}

}  // namespace tricomi::verify
