#pragma once

// Verification suites that bundle the checks of module verify into
// pass/fail reports, and grid sampling to CSV.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tricomi/verify.hpp"

namespace tricomi::suites {

using fundsol::SolutionKind;
using geometry::Source;

enum class Comparison { AtMost, AtLeast };

struct Metric {
  std::string name;
  double value;
  double tolerance;
  Comparison cmp = Comparison::AtMost;

  bool passed() const;
};

struct RunReport {
  std::string command;
  std::vector<Metric> metrics;

  bool passed() const;
  // {"command", "passed", "metrics": [{"name", "value", "tolerance", "comparison", "passed"}]}
  std::string to_json() const;
};

struct VerifyOptions {
  verify::BumpSpec bump;
  verify::QuadSpec quad;
  double tol = 1e-2;
};
RunReport run_verify(SolutionKind kind, const Source& s, const VerifyOptions& opt);

struct ResidualOptions {
  double h = 1e-3;
  int points = 100;
  std::uint64_t seed = 1;
  double max_normalized = 1e-5;
  double min_ratio = 3.5;
  double margin_fraction = 0.25;  // distance to singular curves, in units of l0
  double roundoff_floor = 1e-6;   // evaluation noise amplified by 1/h^2 at h = 1e-3
};
RunReport run_residual(const Source& s, const ResidualOptions& opt);

struct RiemannOptions {
  double h = 1e-3;
  double unit_tol = 1e-14;
  double min_order = 1.9;
};
RunReport run_riemann(const Source& s, const RiemannOptions& opt);

struct LimitOptions {
  int k_first = 1;
  int k_last = 6;
  double final_ratio = 0.1;
};
// Pointwise study at p.
RunReport run_limits(SolutionKind kind, geometry::PhysPoint p, const LimitOptions& opt);
// Weak study against the bump.
RunReport run_weak_limits(SolutionKind kind, const verify::BumpSpec& bump, const verify::QuadSpec& q,
                          const LimitOptions& opt);

struct GridSpec {
  double xmin, xmax, ymin, ymax;
  int nx, ny;
};

// Writes x,y,re,im,region rows at cell centers, y-major. Singular samples get
// empty re/im. Written to a temporary file and renamed; nothing is left behind
// on failure. Returns the number of data rows.
long write_grid_csv(SolutionKind kind, const Source& s, const GridSpec& g, const std::string& path);

// One CSV row or JSON object for a single evaluation, with %.17g numbers.
std::string format_eval_csv(double x, double y, std::complex<double> v, std::string_view region);
std::string format_eval_json(double x, double y, std::complex<double> v, std::string_view region);

}  // namespace tricomi::suites
