#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "tricomi/error.hpp"
#include "tricomi/verify.hpp"

namespace tricomi::verify {

namespace {

constexpr int kSubcells = 8;

double char_jacobian(double l, double m) { return 1.0 / (std::cbrt(2.0) * 9.0 * std::cbrt(l - m)); }

// Boundary flux of Green's formula for y d_xx + d_yy:
// div(y (E phi_x - phi E_x), E phi_y - phi E_y) = E T(phi) - phi T(E),
// integrated as P dy - Q dx along the contour.
cplx flux(const Source& s, const BumpSpec& bump, CharPoint q, double dl, double dm) {
  const PhysPoint p = geometry::from_char(q);
  const BumpJet j = bump_jet(bump, p);
  if (j.phi == 0.0 && j.phi_x == 0.0 && j.phi_y == 0.0) return 0.0;
  const fundsol::EPhysGrad g = fundsol::eval_E_phys_grad(p, s);
  const cplx P = p.y * (g.e * j.phi_x - j.phi * g.e_x);
  const cplx Q = g.e * j.phi_y - j.phi * g.e_y;
  const double dx = (dl + dm) / 6.0;
  const double dy = -(dl - dm) / (6.0 * std::cbrt((q.l - q.m) / 4.0));
  return P * dy - Q * dx;
}

}  // namespace

GreenReport green_identity_check(const Source& s, const BumpSpec& bump, const CharRect& rect, int order) {
  if (!(s.l0 > 0.0)) fail(ErrorCode::Domain, "green_identity_check: requires b < 0");
  if (!(rect.l_lo < rect.l_hi) || !(rect.m_lo < rect.m_hi))
    fail(ErrorCode::InvalidArgument, "green_identity_check: empty rectangle");
  if (!(rect.m_hi < rect.l_lo))
    fail(ErrorCode::Domain, "green_identity_check: rectangle must lie in y < 0");
  const double l0 = s.l0;
  if ((rect.m_lo <= l0 && l0 <= rect.m_hi) || (rect.l_lo <= -l0 && -l0 <= rect.l_hi))
    fail(ErrorCode::SingularLocus, "green_identity_check: rectangle meets a reflected characteristic");

  const GaussRule rule = graded_rule(kSubcells, order, 1.0);
  const double wl = rect.l_hi - rect.l_lo;
  const double wm = rect.m_hi - rect.m_lo;

  cplx area = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double l = rect.l_lo + wl * rule.nodes[i];
    cplx row = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double m = rect.m_lo + wm * rule.nodes[k];
      const PhysPoint p = geometry::from_char({l, m});
      const double t = bump_T(bump, p);
      if (t == 0.0) continue;
      row += rule.weights[k] * t * fundsol::eval_E_char({l, m}, s) * char_jacobian(l, m);
    }
    area += rule.weights[i] * row;
  }
  area *= wl * wm;

  // Counterclockwise in (l, m); the chart preserves orientation.
  cplx contour = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    const double w = rule.weights[i];
    contour += w * wl * flux(s, bump, {rect.l_lo + wl * t, rect.m_lo}, 1.0, 0.0);
    contour += w * wm * flux(s, bump, {rect.l_hi, rect.m_lo + wm * t}, 0.0, 1.0);
    contour += w * wl * flux(s, bump, {rect.l_hi - wl * t, rect.m_hi}, -1.0, 0.0);
    contour += w * wm * flux(s, bump, {rect.l_lo, rect.m_hi - wm * t}, 0.0, -1.0);
  }

  GreenReport rep{area, contour, 0.0};
  const double scale = std::max(std::abs(area), std::abs(contour));
  rep.discrepancy = scale > 0.0 ? std::abs(area - contour) / scale : 0.0;
  return rep;
}

}  // namespace tricomi::verify
