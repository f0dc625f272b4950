#include <cmath>

#include "tricomi/verify.hpp"

namespace tricomi::verify {

double bump_value(const BumpSpec& b, PhysPoint p) {
  const double dx = p.x - b.cx;
  const double dy = p.y - b.cy;
  const double s = (dx * dx + dy * dy) / (b.r * b.r);
  if (s >= 1.0) return 0.0;
  return b.amp * std::exp(1.0 - 1.0 / (1.0 - s));
}

BumpJet bump_jet(const BumpSpec& b, PhysPoint p) {
  const double r2 = b.r * b.r;
  const double dx = p.x - b.cx;
  const double dy = p.y - b.cy;
  const double s = (dx * dx + dy * dy) / r2;
  if (s >= 1.0) return {};
  const double w = 1.0 / (1.0 - s);
  const double phi = b.amp * std::exp(1.0 - w);
  // g(s) = 1 - 1/(1-s): g' = -w^2, g'' = -2 w^3.
  const double g1 = -w * w;
  const double g2 = -2.0 * w * w * w;
  const double sx = 2.0 * dx / r2;
  const double sy = 2.0 * dy / r2;
  const double sxx = 2.0 / r2;
  BumpJet j;
  j.phi = phi;
  j.phi_x = phi * g1 * sx;
  j.phi_y = phi * g1 * sy;
  j.phi_xx = phi * ((g1 * g1 + g2) * sx * sx + g1 * sxx);
  j.phi_yy = phi * ((g1 * g1 + g2) * sy * sy + g1 * sxx);
  return j;
}

double bump_T(const BumpSpec& b, PhysPoint p) {
  const BumpJet j = bump_jet(b, p);
  return p.y * j.phi_xx + j.phi_yy;
}

}  // namespace tricomi::verify
