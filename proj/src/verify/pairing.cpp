#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "tricomi/error.hpp"
#include "tricomi/specfun.hpp"
#include "tricomi/verify.hpp"

namespace tricomi::verify {

namespace {

using geometry::RegionTag;

enum class CellShape { Rect, Tri, Upper };

// Rect: l in [a0, a1], m in [b0, b1]. Tri: l in [a0, a1], m from l down to b0.
// Upper: x in [a0, a1], y in [b0, b1].
struct Cell {
  CellShape shape;
  double a0, a1, b0, b1;
};

// 1 / (2^{1/3} 9 (l - m)^{1/3}) = dx dy / (dl dm).
double char_jacobian(double l, double m) { return 1.0 / (std::cbrt(2.0) * 9.0 * std::cbrt(l - m)); }

bool is_origin_kind(SolutionKind k) { return k == SolutionKind::FPlus || k == SolutionKind::FMinus; }

std::vector<double> merged_breakpoints(std::vector<double> pts, double scale) {
  std::sort(pts.begin(), pts.end());
  std::vector<double> out;
  for (double p : pts)
    if (out.empty() || p - out.back() > 1e-13 * scale) out.push_back(p);
  return out;
}

struct Plan {
  std::vector<Cell> cells;
  std::vector<std::string> curves;
};

Plan build_plan(SolutionKind kind, const Source& s, const BumpSpec& bump) {
  Plan plan;
  const std::uint8_t support = fundsol::support_mask(kind);
  const double l0 = is_origin_kind(kind) ? 0.0 : s.l0;
  const Source src = is_origin_kind(kind) ? geometry::source_from_b(0.0) : s;
  const double xmin = bump.cx - bump.r;
  const double xmax = bump.cx + bump.r;

  if (bump.cy - bump.r < 0.0) {
    const double nymax = bump.r - bump.cy;               // largest -y on the support
    const double nymin = std::max(0.0, -(bump.cy + bump.r));  // smallest -y
    const double lmin = 3.0 * xmin + 2.0 * std::pow(nymin, 1.5);
    const double lmax = 3.0 * xmax + 2.0 * std::pow(nymax, 1.5);
    const double mmin = 3.0 * xmin - 2.0 * std::pow(nymax, 1.5);
    const double mmax = 3.0 * xmax - 2.0 * std::pow(nymin, 1.5);
    const double lo = std::min(lmin, mmin);
    const double hi = std::max(lmax, mmax);
    std::vector<double> pts{lmin, lmax, mmin, mmax};
    for (double v : {-l0, l0})
      if (v > lo && v < hi) pts.push_back(v);
    const double scale = 1.0 + std::max(std::abs(lo), std::abs(hi));
    const std::vector<double> B = merged_breakpoints(pts, scale);
    auto inside = [](double u0, double u1, double r0, double r1) { return u0 >= r0 && u1 <= r1; };
    const double eps = 1e-12 * scale;
    for (std::size_t i = 0; i + 1 < B.size(); ++i) {
      if (!inside(B[i], B[i + 1], lmin - eps, lmax + eps)) continue;
      for (std::size_t j = 0; j <= i; ++j) {
        if (!inside(B[j], B[j + 1], mmin - eps, mmax + eps)) continue;
        // Region from an interior point of the cell.
        double lc = 0.5 * (B[i] + B[i + 1]);
        double mc = 0.5 * (B[j] + B[j + 1]);
        if (i == j) {
          lc = B[i] + 2.0 / 3.0 * (B[i + 1] - B[i]);
          mc = B[i] + 1.0 / 3.0 * (B[i + 1] - B[i]);
        }
        const auto region = geometry::classify(geometry::from_char({lc, mc}), src, 0.0);
        if (!(region.adjacent & support)) continue;
        plan.cells.push_back({i == j ? CellShape::Tri : CellShape::Rect, B[i], B[i + 1], B[j], B[j + 1]});
      }
    }
    auto crosses = [](double v, double r0, double r1) { return v >= r0 && v <= r1; };
    if (l0 > 0.0) {
      if (crosses(l0, lmin, lmax)) plan.curves.push_back("source characteristic l = l0");
      if (crosses(-l0, mmin, mmax)) plan.curves.push_back("source characteristic m = -l0");
      if (crosses(l0, mmin, mmax) && lmax >= l0) plan.curves.push_back("reflected characteristic m = l0");
      if (crosses(-l0, lmin, lmax) && mmin <= -l0)
        plan.curves.push_back("reflected characteristic l = -l0");
    } else {
      if (crosses(0.0, lmin, lmax) || crosses(0.0, mmin, mmax))
        plan.curves.push_back("origin characteristics l = 0, m = 0");
    }
  }

  if (bump.cy + bump.r > 0.0) {
    const std::uint8_t upper_bit = is_origin_kind(kind) ? geometry::kBitDPlus : geometry::kBitDII;
    if (support & upper_bit) {
      std::vector<double> xs{xmin, xmax};
      const double a = is_origin_kind(kind) ? 0.0 : s.a;
      for (double v : {-a, a})
        if (v > xmin && v < xmax) xs.push_back(v);
      const std::vector<double> X = merged_breakpoints(xs, 1.0 + std::abs(xmin) + std::abs(xmax));
      const double y0 = std::max(0.0, bump.cy - bump.r);
      const double y1 = bump.cy + bump.r;
      for (std::size_t i = 0; i + 1 < X.size(); ++i) plan.cells.push_back({CellShape::Upper, X[i], X[i + 1], y0, y1});
    }
  }
  if (bump.cy - bump.r < 0.0 && bump.cy + bump.r > 0.0) plan.curves.push_back("axis y = 0");
  return plan;
}

cplx kind_value(SolutionKind kind, const Source& s, PhysPoint p, const CharPoint* q) {
  if (kind == SolutionKind::FPlus) return fundsol::f_plus(p);
  if (kind == SolutionKind::FMinus) return fundsol::f_minus(p);
  const cplx e = q ? fundsol::eval_E_char(*q, s) : fundsol::eval_E_phys(p, s);
  return fundsol::apply_kind(kind, e);
}

double weight_at(const BumpSpec& bump, PhysPoint p, TestWeight w) {
  return w == TestWeight::TPhi ? bump_T(bump, p) : bump_value(bump, p);
}

bool in_support(const BumpSpec& bump, PhysPoint p) {
  const double dx = p.x - bump.cx;
  const double dy = p.y - bump.cy;
  return dx * dx + dy * dy < bump.r * bump.r;
}

cplx integrate_cell(const Cell& c, SolutionKind kind, const Source& s, const BumpSpec& bump,
                    TestWeight w, const GaussRule& ra, const GaussRule& rb) {
  cplx total = 0.0;
  const double wa = c.a1 - c.a0;
  for (std::size_t i = 0; i < ra.nodes.size(); ++i) {
    const double u = c.a0 + wa * ra.nodes[i];
    cplx row = 0.0;
    for (std::size_t j = 0; j < rb.nodes.size(); ++j) {
      double jac;
      PhysPoint p;
      CharPoint q{};
      bool have_q = false;
      switch (c.shape) {
        case CellShape::Rect: {
          const double m = c.b0 + (c.b1 - c.b0) * rb.nodes[j];
          q = {u, m};
          have_q = true;
          jac = (c.b1 - c.b0) * char_jacobian(u, m);
          break;
        }
        case CellShape::Tri: {
          const double m = u - (u - c.b0) * rb.nodes[j];
          q = {u, m};
          have_q = true;
          jac = (u - c.b0) * char_jacobian(u, m);
          break;
        }
        case CellShape::Upper:
        default:
          p = {u, c.b0 + (c.b1 - c.b0) * rb.nodes[j]};
          jac = c.b1 - c.b0;
          break;
      }
      if (have_q) {
        if (!(q.l > q.m)) continue;
        p = geometry::from_char(q);
      }
      if (!in_support(bump, p)) continue;
      const double t = weight_at(bump, p, w);
      if (t == 0.0) continue;
      row += rb.weights[j] * jac * t * kind_value(kind, s, p, have_q ? &q : nullptr);
    }
    total += ra.weights[i] * row;
  }
  return wa * total;
}

std::vector<cplx> integrate_cells(const Plan& plan, SolutionKind kind, const Source& s,
                                  const BumpSpec& bump, const QuadSpec& q, int cells_per_axis,
                                  TestWeight w) {
  const GaussRule rule = graded_rule(cells_per_axis, q.gauss_order, q.grading_exponent);
  std::vector<cplx> out(plan.cells.size());
  parallel_for(plan.cells.size(), [&](std::size_t i) {
    out[i] = integrate_cell(plan.cells[i], kind, s, bump, w, rule, rule);
  });
  return out;
}

void validate(const BumpSpec& bump, const QuadSpec& q) {
  if (!(bump.r > 0.0) || !std::isfinite(bump.cx) || !std::isfinite(bump.cy))
    fail(ErrorCode::InvalidArgument, "bump: radius must be positive and center finite");
  if (q.base_cells_per_axis < 1 || q.gauss_order < 1)
    fail(ErrorCode::InvalidArgument, "quadrature: cells and order must be positive");
}

void validate_source(SolutionKind kind, const Source& s) {
  if (!is_origin_kind(kind) && !(s.l0 > 0.0))
    fail(ErrorCode::Domain, fmt::format("{} pairing requires b < 0", fundsol::kind_name(kind)));
  if (kind == SolutionKind::RiemannR || kind == SolutionKind::HomogeneousU)
    fail(ErrorCode::InvalidArgument, "pairing: kind is not a fundamental solution");
}

}  // namespace

cplx integrate_kind(SolutionKind kind, const Source& s, const BumpSpec& bump, const QuadSpec& q,
                    TestWeight weight) {
  validate(bump, q);
  validate_source(kind, s);
  const Plan plan = build_plan(kind, s, bump);
  const auto vals = integrate_cells(plan, kind, s, bump, q, q.base_cells_per_axis, weight);
  cplx sum = 0.0;
  for (const cplx& v : vals) sum += v;
  return sum;
}

PairingReport pairing(SolutionKind kind, const Source& s, const BumpSpec& bump, const QuadSpec& q,
                      TestWeight weight) {
  validate(bump, q);
  validate_source(kind, s);
  const Plan plan = build_plan(kind, s, bump);
  const auto coarse = integrate_cells(plan, kind, s, bump, q, q.base_cells_per_axis, weight);
  const auto fine = integrate_cells(plan, kind, s, bump, q, 2 * q.base_cells_per_axis, weight);
  PairingReport rep;
  rep.value = 0.0;
  rep.coarse_value = 0.0;
  std::size_t worst = 0;
  double worst_diff = -1.0;
  for (std::size_t i = 0; i < fine.size(); ++i) {
    rep.value += fine[i];
    rep.coarse_value += coarse[i];
    const double d = std::abs(fine[i] - coarse[i]);
    if (d > worst_diff) {
      worst_diff = d;
      worst = i;
    }
  }
  rep.estimated_error = std::abs(rep.value - rep.coarse_value);
  const long per_cell = 4L * q.base_cells_per_axis * q.base_cells_per_axis;
  rep.cells = static_cast<long>(plan.cells.size()) * per_cell;
  rep.singular_curves_handled = plan.curves;
  const double scale = std::max(std::abs(rep.value), std::abs(bump.amp));
  if (rep.estimated_error > q.target_tol * scale) {
    const Cell& c = plan.cells[worst];
    fail(ErrorCode::ToleranceNotMet,
         fmt::format("pairing {}: estimated error {:.3e} exceeds {:.3e}; worst cell #{} "
                     "[{:.6g}, {:.6g}] x [{:.6g}, {:.6g}] changed by {:.3e}",
                     fundsol::kind_name(kind), rep.estimated_error, q.target_tol * scale, worst, c.a0,
                     c.a1, c.b0, c.b1, worst_diff));
  }
  return rep;
}

double pairing_expected(SolutionKind kind, const Source& s, const BumpSpec& bump) {
  if (is_origin_kind(kind)) return bump_value(bump, {0.0, 0.0});
  if (kind == SolutionKind::Eraw) return 0.0;
  return bump_value(bump, {0.0, s.b});
}

AxisDerivatives axis_y_derivatives(double x, const Source& s) {
  const double zabs = 9.0 * (s.a * s.a - x * x);
  if (!(s.l0 > 0.0) || !(zabs > 0.0))
    fail(ErrorCode::Domain, "axis_y_derivatives: requires b < 0 and |x| < a");
  // Coefficient of (1 - zeta)^{2/3} in the expansion of F(1/6,1/6;1;zeta) at 1.
  const double B = specfun::gamma(-2.0 / 3.0) / std::pow(specfun::gamma(1.0 / 6.0), 2);
  const double K = B * std::pow(zabs, -1.0 / 6.0) * std::pow(8.0 * s.l0 / zabs, 2.0 / 3.0);
  return {-K, K * std::polar(1.0, -std::numbers::pi / 3.0)};
}

cplx axis_layer_term(SolutionKind kind, const Source& s, const BumpSpec& bump, int order) {
  if (!(fundsol::support_mask(kind) & geometry::kBitDII) || is_origin_kind(kind)) return 0.0;
  const double lo = std::max(-s.a, bump.cx - bump.r);
  const double hi = std::min(s.a, bump.cx + bump.r);
  if (!(hi > lo)) return 0.0;
  const GaussRule rule = graded_rule(4, order, 12.0);
  cplx sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double x = lo + (hi - lo) * rule.nodes[k];
    const double phi = bump_value(bump, {x, 0.0});
    if (phi == 0.0) continue;
    const AxisDerivatives d = axis_y_derivatives(x, s);
    sum += rule.weights[k] * phi * fundsol::apply_kind(kind, d.above - d.below);
  }
  return (hi - lo) * sum;
}

}  // namespace tricomi::verify
