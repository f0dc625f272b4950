#pragma once

// Numerical checks of the fundamental-solution identities: distributional
// pairings by graded Gauss-Legendre quadrature, Green's identity on
// characteristic rectangles, finite-difference residual scans and limit studies.

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tricomi/fundsol.hpp"
#include "tricomi/geometry.hpp"

namespace tricomi::verify {

using cplx = std::complex<double>;
using fundsol::SolutionKind;
using geometry::CharPoint;
using geometry::PhysPoint;
using geometry::Source;

// ---------------------------------------------------------------- bump

// phi = amp exp(1 - 1/(1 - rho^2)), rho^2 = |p - c|^2 / r^2 < 1.
struct BumpSpec {
  double cx = 0.0;
  double cy = 0.0;
  double r = 1.0;
  double amp = 1.0;
};

struct BumpJet {
  double phi = 0.0;
  double phi_x = 0.0;
  double phi_y = 0.0;
  double phi_xx = 0.0;
  double phi_yy = 0.0;
};

double bump_value(const BumpSpec& b, PhysPoint p);
BumpJet bump_jet(const BumpSpec& b, PhysPoint p);
// y phi_xx + phi_yy from closed-form derivatives.
double bump_T(const BumpSpec& b, PhysPoint p);

// ---------------------------------------------------------- quadrature

struct QuadSpec {
  int base_cells_per_axis = 16;
  int gauss_order = 10;
  double grading_exponent = 3.0;
  double target_tol = 1e-2;
};

struct GaussRule {
  std::vector<double> nodes;    // on [0, 1]
  std::vector<double> weights;  // sum to 1
};
GaussRule gauss_legendre(int order);

// Composite rule on [0, 1]: `cells` equal pieces in t, each mapped through the
// two-sided power grading t -> 0.5 (2t)^p near both ends.
GaussRule graded_rule(int cells, int order, double exponent);

// Worker count: TRICOMI_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();
// Runs fn(i) for i in [0, n); results must be written to per-index slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// ------------------------------------------------------------- pairing

struct PairingReport {
  cplx value;
  double estimated_error = 0.0;
  long cells = 0;
  std::vector<std::string> singular_curves_handled;
  cplx coarse_value;
};

enum class TestWeight {
  TPhi,  // integrate E T(phi): the distributional pairing
  Phi,   // integrate E phi: a weak value of E itself
};

// Integral of E_kind w over the bump support at one refinement level.
cplx integrate_kind(SolutionKind kind, const Source& s, const BumpSpec& bump, const QuadSpec& q,
                    TestWeight weight = TestWeight::TPhi);

// Pairing at base and doubled refinement; throws ToleranceNotMet when the
// two levels differ by more than target_tol * max(|value|, amp).
PairingReport pairing(SolutionKind kind, const Source& s, const BumpSpec& bump, const QuadSpec& q,
                      TestWeight weight = TestWeight::TPhi);

// Value the pairing should reproduce: phi(0, b), or phi(0, 0) for FPlus/FMinus.
double pairing_expected(SolutionKind kind, const Source& s, const BumpSpec& bump);

// One-sided y-derivatives of E on the axis segment |x| < a.
struct AxisDerivatives {
  cplx below;
  cplx above;
};
AxisDerivatives axis_y_derivatives(double x, const Source& s);

// Integral over |x| < a of phi(x, 0) times the jump of (E_kind)_y across y = 0.
cplx axis_layer_term(SolutionKind kind, const Source& s, const BumpSpec& bump, int order = 64);

// --------------------------------------------------------------- green

struct CharRect {
  double l_lo;
  double l_hi;
  double m_lo;
  double m_hi;
};

struct GreenReport {
  cplx area;
  cplx contour;
  double discrepancy;  // |area - contour| / max(|area|, |contour|), 0 if both vanish
};

// Compares the area integral of E T(phi) with the boundary form of Green's
// identity in characteristic coordinates. The rectangle must lie in y < 0
// and avoid the reflected characteristics.
GreenReport green_identity_check(const Source& s, const BumpSpec& bump, const CharRect& rect,
                                 int order = 24);

// ------------------------------------------------------------ residuals

enum class ResidualForm {
  Thyp,      // u_lm - (1/6)/(l - m) (u_l - u_m), chart (l, m)
  Tadjoint,  // v_lm + (1/6)/(l - m) (v_l - v_m) - (1/3)/(l - m)^2 v, chart (l, m)
  Tphys,     // y u_xx + u_yy, chart (x, y)
  Tell,      // u_xx + u_ss + u_s / (3 s), chart (x, s)
};

using Field = std::function<cplx(double, double)>;

struct ResidualSample {
  double u;
  double v;
  double residual;    // |form applied to field|
  double scale;       // sum of term magnitudes, plus |u| / L^2 when L > 0
  double normalized;  // residual / scale
};

// `length` is the chart's natural length L. It keeps the scale honest where
// the field is locally almost linear and every term nearly vanishes.
std::vector<ResidualSample> residual_scan(ResidualForm form, const Field& field,
                                          const std::vector<std::pair<double, double>>& points,
                                          double h, double length = 0.0);

double max_normalized(const std::vector<ResidualSample>& samples);

// -------------------------------------------------------------- limits

struct LimitSample {
  double b;
  cplx value;
  cplx limit;
  double deviation;
};

// Pointwise deviation |E_kind(p; b) - limit(p)|; the limit is F_- for EI,
// F_+ for ESharp and 0 for EIII/EIV.
std::vector<LimitSample> limit_study(SolutionKind kind, PhysPoint p, const std::vector<double>& bs);

// Weak deviation |integral (E_kind(b) - limit) phi| over the bump.
std::vector<LimitSample> weak_limit_study(SolutionKind kind, const BumpSpec& bump,
                                          const std::vector<double>& bs, const QuadSpec& q);

std::vector<double> geometric_b_sequence(int k_first, int k_last);  // b = -2^{-k}

// |E| sampled along p = base - d n and the slopes of |E| against log d per
// consecutive pair of distances.
struct LogFit {
  std::vector<double> distances;
  std::vector<double> magnitudes;
  std::vector<double> slopes;
  double spread;  // max slope / min slope - 1
};
LogFit log_singularity_fit(const Source& s, PhysPoint base, PhysPoint normal,
                           const std::vector<double>& distances);

}  // namespace tricomi::verify
