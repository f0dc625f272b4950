#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "tricomi/error.hpp"
#include "tricomi/suites.hpp"

namespace tricomi::suites {

namespace {

using geometry::CharPoint;
using geometry::PhysPoint;
using verify::Field;
using verify::ResidualForm;
using Points = std::vector<std::pair<double, double>>;
using cplx = std::complex<double>;

void require_hyperbolic_source(const Source& s, const char* who) {
  if (!(s.l0 > 0.0)) fail(ErrorCode::Domain, fmt::format("{}: requires b < 0", who));
}

// Rectangle in (l, m) minus the part with l - m < gap.
struct CharBox {
  const char* name;
  double l_lo, l_hi, m_lo, m_hi;
};

Points sample_box(const CharBox& box, int n, double gap, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ul(box.l_lo, box.l_hi);
  std::uniform_real_distribution<double> um(box.m_lo, box.m_hi);
  Points pts;
  while (static_cast<int>(pts.size()) < n) {
    const double l = ul(rng);
    const double m = um(rng);
    if (l - m >= gap) pts.emplace_back(l, m);
  }
  return pts;
}

// Interior boxes of every region, kept `margin` away from all singular curves.
std::vector<CharBox> region_boxes(double l0, double margin) {
  const double w = 2.0 * l0;
  const double in = l0 - margin;
  return {
      {"DI", l0 + margin, l0 + w, -l0 - w, -l0 - margin},
      {"DIII", l0 + margin, l0 + w, -in, in},
      {"DIV", -in, in, -l0 - w, -l0 - margin},
      {"DII_triangle", -in, in, -in, in},
      {"DII_outer_right", l0 + margin, l0 + 2.0 * w, l0 + margin, l0 + w},
      {"DII_outer_left", -l0 - w, -l0 - margin, -l0 - 2.0 * w, -l0 - margin},
  };
}

void add_residual_metrics(RunReport& rep, const std::string& label, ResidualForm form, const Field& f,
                          const Points& pts, double length, const ResidualOptions& opt) {
  const double r1 = verify::max_normalized(verify::residual_scan(form, f, pts, opt.h, length));
  const double r2 = verify::max_normalized(verify::residual_scan(form, f, pts, 0.5 * opt.h, length));
  rep.metrics.push_back({label + "_max_normalized", r1, opt.max_normalized});
  if (r1 <= opt.roundoff_floor) {
    rep.metrics.push_back({label + "_at_roundoff_floor", r1, opt.roundoff_floor});
  } else {
    rep.metrics.push_back({label + "_refinement_ratio", r2 > 0.0 ? r1 / r2 : INFINITY, opt.min_ratio,
                           Comparison::AtLeast});
  }
}

double rel_or_abs(double err, double scale) { return scale != 0.0 ? err / std::abs(scale) : err; }

}  // namespace

RunReport run_verify(SolutionKind kind, const Source& s, const VerifyOptions& opt) {
  RunReport rep{fmt::format("verify {}", fundsol::kind_name(kind)), {}};
  const verify::PairingReport pr = verify::pairing(kind, s, opt.bump, opt.quad);
  const double expected = verify::pairing_expected(kind, s, opt.bump);
  const double scale = expected != 0.0 ? expected : opt.bump.amp;
  rep.metrics.push_back({"relative_error", std::abs(pr.value.real() - expected) / std::abs(scale), opt.tol});
  rep.metrics.push_back({"imag_ratio", std::abs(pr.value.imag()) / std::abs(scale), opt.tol});
  rep.metrics.push_back(
      {"quadrature_estimated_error", rel_or_abs(pr.estimated_error, std::max(std::abs(pr.value), std::abs(scale))),
       opt.quad.target_tol});
  return rep;
}

RunReport run_residual(const Source& s, const ResidualOptions& opt) {
  require_hyperbolic_source(s, "residual suite");
  if (opt.points < 1) fail(ErrorCode::InvalidArgument, "residual suite: points must be positive");
  RunReport rep{"residual", {}};
  std::mt19937_64 rng(opt.seed);
  const double l0 = s.l0;
  const double m0 = -l0;
  const double margin = opt.margin_fraction * l0 + 20.0 * opt.h;

  const Field e_char = [&](double l, double m) {
    return fundsol::eval_E_general(l, m, l0, m0, specfun::CutSide::Above);
  };
  const Field r_char = [&](double l, double m) { return std::cbrt(l - m) * e_char(l, m); };
  const Field e_phys = [&](double x, double y) { return fundsol::eval_E_phys({x, y}, s); };

  for (const CharBox& box : region_boxes(l0, margin)) {
    const Points cp = sample_box(box, opt.points, margin, rng);
    Points pp;
    for (const auto& [l, m] : cp) {
      const PhysPoint p = geometry::from_char({l, m});
      pp.emplace_back(p.x, p.y);
    }
    add_residual_metrics(rep, fmt::format("thyp_{}", box.name), ResidualForm::Thyp, e_char, cp, l0, opt);
    add_residual_metrics(rep, fmt::format("tadjoint_{}", box.name), ResidualForm::Tadjoint, r_char, cp, l0, opt);
    add_residual_metrics(rep, fmt::format("tphys_{}", box.name), ResidualForm::Tphys, e_phys, pp, -s.b, opt);
  }

  // Lengths per chart: l0 for (l, m), |b| for (x, y), |b|^(3/2) for (x, s).
  // Elliptic half-plane: Im E_II is Tricomi harmonic. The (x, s) chart is
  // (l, m) scaled by 1/3, so s >= margin keeps h relative to the distance
  // from the axis and from (+-a, 0) the same as below.
  const double ymin = std::pow(1.5 * margin, 2.0 / 3.0);
  const double ymax = std::max(3.0 * (-s.b), ymin + (-s.b));
  std::uniform_real_distribution<double> ux(-3.0 * s.a, 3.0 * s.a);
  std::uniform_real_distribution<double> uy(ymin, ymax);
  Points up;
  Points us;
  for (int i = 0; i < opt.points; ++i) {
    const double x = ux(rng);
    const double y = uy(rng);
    up.emplace_back(x, y);
    us.emplace_back(x, 2.0 * std::pow(y, 1.5) / 3.0);
  }
  const Field im_eii = [&](double x, double y) {
    return cplx(fundsol::apply_kind(SolutionKind::EII, fundsol::eval_E_phys({x, y}, s)).imag());
  };
  const Field im_eii_s = [&](double x, double sv) { return im_eii(x, std::pow(1.5 * sv, 2.0 / 3.0)); };
  add_residual_metrics(rep, "tphys_im_EII_upper", ResidualForm::Tphys, im_eii, up, -s.b, opt);
  add_residual_metrics(rep, "tell_im_EII_upper", ResidualForm::Tell, im_eii_s, us, std::pow(-s.b, 1.5), opt);
  return rep;
}

RunReport run_riemann(const Source& s, const RiemannOptions& opt) {
  require_hyperbolic_source(s, "riemann suite");
  RunReport rep{"riemann", {}};
  const double l0 = s.l0;
  const double m0 = -l0;
  rep.metrics.push_back({"unit_at_source", std::abs(fundsol::riemann_R(l0, m0, l0, m0) - 1.0), opt.unit_tol});

  const double fractions[] = {0.25, 0.5, 1.0, 2.0};
  // Relative residual of a characteristic ODE at spacing h.
  auto along_m0 = [&](double h) {
    double worst = 0.0;
    for (double f : fractions) {
      const double l = l0 + f * l0;
      const double r = fundsol::riemann_R(l, m0, l0, m0);
      const double d = (fundsol::riemann_R(l + h, m0, l0, m0) - fundsol::riemann_R(l - h, m0, l0, m0)) / (2.0 * h);
      const double rhs = (1.0 / 6.0) * r / (l - m0);
      worst = std::max(worst, std::abs(d - rhs) / std::abs(rhs));
    }
    return worst;
  };
  auto along_l0 = [&](double h) {
    double worst = 0.0;
    for (double f : fractions) {
      const double m = m0 - f * l0;
      const double r = fundsol::riemann_R(l0, m, l0, m0);
      const double d = (fundsol::riemann_R(l0, m + h, l0, m0) - fundsol::riemann_R(l0, m - h, l0, m0)) / (2.0 * h);
      const double rhs = -(1.0 / 6.0) * r / (l0 - m);
      worst = std::max(worst, std::abs(d - rhs) / std::abs(rhs));
    }
    return worst;
  };
  for (auto [name, fn] : {std::pair<const char*, std::function<double(double)>>{"along_m0", along_m0},
                          {"along_l0", along_l0}}) {
    const double r1 = fn(opt.h);
    const double r2 = fn(0.5 * opt.h);
    rep.metrics.push_back({fmt::format("{}_residual", name), r1, 1e-5});
    rep.metrics.push_back(
        {fmt::format("{}_order", name), r2 > 0.0 ? std::log2(r1 / r2) : INFINITY, opt.min_order, Comparison::AtLeast});
  }
  return rep;
}

namespace {

void add_sequence_metrics(RunReport& rep, const std::vector<verify::LimitSample>& seq, double final_ratio) {
  // A sequence that is identically zero has already reached its limit.
  int violations = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!(seq[i + 1].deviation < seq[i].deviation) && seq[i].deviation != 0.0) ++violations;
  rep.metrics.push_back({"monotonicity_violations", static_cast<double>(violations), 0.0});
  const double first = seq.front().deviation;
  const double last = seq.back().deviation;
  rep.metrics.push_back({"final_over_initial", first > 0.0 ? last / first : 0.0, final_ratio});
  for (const auto& smp : seq)
    rep.metrics.push_back({fmt::format("deviation_b={:.17g}", smp.b), smp.deviation, first, Comparison::AtMost});
}

}  // namespace

RunReport run_limits(SolutionKind kind, PhysPoint p, const LimitOptions& opt) {
  RunReport rep{fmt::format("limits {}", fundsol::kind_name(kind)), {}};
  add_sequence_metrics(rep, verify::limit_study(kind, p, verify::geometric_b_sequence(opt.k_first, opt.k_last)),
                       opt.final_ratio);
  return rep;
}

RunReport run_weak_limits(SolutionKind kind, const verify::BumpSpec& bump, const verify::QuadSpec& q,
                          const LimitOptions& opt) {
  RunReport rep{fmt::format("limits {} weak", fundsol::kind_name(kind)), {}};
  add_sequence_metrics(
      rep, verify::weak_limit_study(kind, bump, verify::geometric_b_sequence(opt.k_first, opt.k_last), q),
      opt.final_ratio);
  return rep;
}

}  // namespace tricomi::suites
