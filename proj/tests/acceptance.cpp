// Acceptance gate: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero when any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "tricomi/error.hpp"
#include "tricomi/suites.hpp"

using namespace tricomi;
using cplx = std::complex<double>;
using fundsol::SolutionKind;
using geometry::PhysPoint;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(cplx got, cplx want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
  void note(std::string s) { details.push_back(std::move(s)); }
  void expect(bool ok, std::string s) {
    if (!ok) pass = false;
    details.push_back(fmt::format("[{}] {}", ok ? "ok" : "FAILED", s));
  }
};

// Criterion 1
Outcome hypergeometric_regimes() {
  using namespace specfun;
  Outcome o;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double two_pi = 2.0 * kPi;
  auto zone = [&](const char* name, const std::function<cplx()>& draw, const std::function<cplx(cplx)>& f,
                  const std::function<cplx(cplx)>& g) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const cplx z = draw();
      worst = std::max(worst, rel(f(z), g(z)));
    }
    o.expect(worst <= 1e-10, fmt::format("{}: max relative difference {:.3e} over 1000 points", name, worst));
  };
  auto disk = [&](cplx c, double r) { return c + std::polar(r * std::sqrt(u(rng)), two_pi * u(rng)); };
  auto until = [&](std::function<cplx()> gen, std::function<bool(cplx)> ok) {
    return [gen, ok] {
      for (;;) {
        const cplx z = gen();
        if (ok(z)) return z;
      }
    };
  };
  const auto series = [](cplx z) { return f_series(kF16Params, z); };
  const auto conn = [](cplx z) { return f_connection(kF16Params, z); };
  const auto pfaff = [](cplx z) { return f_pfaff(kF16Params, z); };
  const auto cont = [](cplx z) { return f_continuation_log(1.0 / 6.0, 1.0, z); };
  zone("series vs connection", until([&] { return disk(1.0, 0.5); }, [](cplx z) { return std::abs(z) <= 0.9; }),
       series, conn);
  zone("series vs Pfaff", until([&] { return disk(0.0, 0.9); }, [](cplx z) { return z.real() < 0.5; }), series,
       pfaff);
  zone("continuation vs Pfaff",
       until([&] { return std::polar(1.4 + 8.0 * u(rng), two_pi * u(rng)); },
             [](cplx z) { return z.real() < 0.4 && std::abs(z / (z - 1.0)) <= 0.9; }),
       cont, pfaff);
  zone("continuation vs connection",
       until([&] { return disk(1.0, 0.5); },
             [](cplx z) { return std::abs(z) > 1.05 && std::abs(z.imag()) > 1e-3; }),
       cont, conn);
  zone("series on the unit circle vs connection",
       until([&] { return std::polar(1.0, two_pi * u(rng)); },
             [](cplx z) { return std::abs(1.0 - z) > 0.3 && std::abs(1.0 - z) <= 0.5; }),
       series, conn);
  const auto f76c = [](cplx z) { return f_continuation_log(7.0 / 6.0, 2.0, z); };
  const auto f76p = [](cplx z) { return f_pfaff(kF76Params, z); };
  zone("F(7/6,7/6;2) continuation vs Pfaff",
       until([&] { return std::polar(1.4 + 8.0 * u(rng), two_pi * u(rng)); },
             [](cplx z) { return z.real() < 0.4 && std::abs(z / (z - 1.0)) <= 0.9; }),
       f76c, f76p);
  return o;
}

// Criterion 2
Outcome gauss_value() {
  Outcome o;
  const double want = specfun::gamma(2.0 / 3.0) / std::pow(specfun::gamma(5.0 / 6.0), 2);
  const double diff = std::abs(specfun::f16(1.0).real() - want);
  o.expect(diff <= 1e-12, fmt::format("|F(1/6,1/6;1;1) - Gamma(2/3)/Gamma(5/6)^2| = {:.3e}", diff));
  return o;
}

void append_report(Outcome& o, const suites::RunReport& rep, bool show_all) {
  for (const auto& m : rep.metrics)
    if (show_all || !m.passed())
      o.expect(m.passed(), fmt::format("{} = {:.4e} ({} {:.1e})", m.name, m.value,
                                       m.cmp == suites::Comparison::AtMost ? "<=" : ">=", m.tolerance));
  if (!rep.passed()) o.pass = false;
}

// Criterion 3
Outcome riemann() {
  Outcome o;
  suites::RiemannOptions opt;
  opt.h = 1e-3;
  append_report(o, suites::run_riemann(geometry::source_from_b(-1.0), opt), true);
  return o;
}

// Criterion 4
Outcome pde_residuals() {
  Outcome o;
  const auto rep = suites::run_residual(geometry::source_from_b(-1.0), {});
  double worst = 0.0;
  double min_ratio = INFINITY;
  for (const auto& m : rep.metrics) {
    if (m.cmp == suites::Comparison::AtMost) worst = std::max(worst, m.value);
    else min_ratio = std::min(min_ratio, m.value);
  }
  o.note(fmt::format("{} metrics over 6 hyperbolic regions and the elliptic half-plane, 100 points each",
                     rep.metrics.size()));
  o.note(fmt::format("worst normalized residual {:.3e}, smallest h/(h/2) ratio {:.3f}", worst, min_ratio));
  append_report(o, rep, false);
  return o;
}

// Criterion 5
Outcome closed_forms() {
  Outcome o;
  const double f1 = fundsol::f16_at_one();
  double w_char = 0.0;
  double w_in = 0.0;
  double w_out = 0.0;
  for (double b : {-1.0, -0.4}) {
    const auto s = geometry::source_from_b(b);
    for (int i = 1; i <= 50; ++i) {
      const double y = b * (0.1 + 2.0 * i / 50.0);
      if (std::abs(y - b) < 1e-9) continue;
      const double w = 2.0 * std::pow(-y, 1.5);
      const double want = std::pow(2.0, -2.0 / 3.0) * std::pow(b * y, -0.25);
      w_char = std::max(w_char, rel(fundsol::eval_E_phys({(s.l0 - w) / 3.0, y}, s), want));
      w_char = std::max(w_char, rel(fundsol::eval_E_phys({(w - s.l0) / 3.0, y}, s), want));
    }
    for (int i = 0; i < 50; ++i) {
      const double x = s.a * (-0.98 + 1.96 * i / 49.0);
      w_in = std::max(w_in, rel(fundsol::eval_E_phys({x, 0.0}, s), f1 * std::pow(9.0 * (s.a * s.a - x * x), -1.0 / 6.0)));
      const double xo = (i % 2 ? 1.0 : -1.0) * (s.a * 1.02 + 3.0 * i / 49.0);
      const cplx want = std::polar(1.0, kPi / 6.0) * f1 * std::pow(9.0 * (xo * xo - s.a * s.a), -1.0 / 6.0);
      w_out = std::max(w_out, rel(fundsol::eval_E_phys({xo, 0.0}, s), want));
    }
  }
  o.expect(w_char <= 1e-10, fmt::format("source characteristics, 2^(-2/3)(by)^(-1/4): max rel {:.3e}", w_char));
  o.expect(w_in <= 1e-10, fmt::format("axis |x| < a, F(1)|9(x^2-a^2)|^(-1/6): max rel {:.3e}", w_in));
  o.expect(w_out <= 1e-10, fmt::format("axis |x| > a, e^(i pi/6) F(1)(9(x^2-a^2))^(-1/6): max rel {:.3e}", w_out));
  o.note("the axis formula without the factor 9 is off by exactly 9^(-1/6); see README");
  return o;
}

// Criterion 6
Outcome distributional() {
  Outcome o;
  const auto s = geometry::source_from_b(-1.0);
  const verify::BumpSpec bumps[] = {{0.0, -1.0, 0.5, 1.0}, {0.19, -0.8, 0.5, 1.0}, {0.0, -0.5, 0.8, 1.0}};
  const char* labels[] = {"at source", "on characteristic", "across axis"};
  for (auto kind : {SolutionKind::EI, SolutionKind::EII, SolutionKind::EIII, SolutionKind::EIV, SolutionKind::ESharp}) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < 3; ++i) {
      const auto& b = bumps[i];
      const double phi = verify::pairing_expected(kind, s, b);
      verify::PairingReport r;
      try {
        r = verify::pairing(kind, s, b, {});
      } catch (const Error& e) {
        o.expect(false, fmt::format("{} {}: {}", fundsol::kind_name(kind), labels[i], e.what()));
        continue;
      }
      const double re = std::abs(r.value.real() - phi) / phi;
      const double im = std::abs(r.value.imag()) / phi;
      std::string extra;
      if (re > 1e-2) {
        const cplx layer = verify::axis_layer_term(kind, s, b);
        extra = fmt::format("; axis layer term {:.6f}{:+.6f}i, pairing minus layer differs from phi by {:.2e}",
                            layer.real(), layer.imag(), std::abs(r.value - layer - phi) / phi);
      }
      o.expect(re <= 1e-2 && im <= 1e-2,
               fmt::format("{} {}: pairing {:.8f}{:+.8f}i, phi(0,b) = {:.8f}, rel {:.2e}, |Im|/phi {:.2e}{}",
                           fundsol::kind_name(kind), labels[i], r.value.real(), r.value.imag(), phi, re, im, extra));
      // Refinement around the default mesh: each doubling at least halves the
      // error against the exact value until a 1e-8 floor.
      const cplx exact = phi + verify::axis_layer_term(kind, s, b);
      double prev = INFINITY;
      bool halves = true;
      std::string errs;
      for (int n : {8, 16, 32, 64}) {
        verify::QuadSpec q;
        q.base_cells_per_axis = n;
        const double err = std::abs(verify::integrate_kind(kind, s, b, q) - exact) / phi;
        if (!(err <= 0.5 * prev || err < 1e-8)) halves = false;
        prev = err;
        errs += fmt::format(" {:.1e}", err);
      }
      o.expect(halves, fmt::format("{} {}: refinement halves the error, n = 8..64:{}", fundsol::kind_name(kind),
                                   labels[i], errs));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(secs <= 120.0, fmt::format("{} runtime {:.2f} s", fundsol::kind_name(kind), secs));
  }
  return o;
}

// Criterion 7
Outcome limits() {
  Outcome o;
  suites::LimitOptions opt;
  auto add = [&](const std::string& label, const suites::RunReport& rep) {
    std::string devs;
    for (const auto& m : rep.metrics)
      if (m.name.rfind("deviation_", 0) == 0) devs += fmt::format(" {:.3e}", m.value);
    o.expect(rep.passed(), fmt::format("{}: deviations{}", label, devs));
  };
  add("EI -> F- at (0,-1)", suites::run_limits(SolutionKind::EI, {0.0, -1.0}, opt));
  add("ESharp -> F+ at (0,1)", suites::run_limits(SolutionKind::ESharp, {0.0, 1.0}, opt));
  add("ESharp -> F+ at (2,-1)", suites::run_limits(SolutionKind::ESharp, {2.0, -1.0}, opt));
  add("EIII -> 0 weakly, bump at (2/3,-1) r 0.5",
      suites::run_weak_limits(SolutionKind::EIII, {2.0 / 3.0, -1.0, 0.5, 1.0}, {}, opt));
  add("EIV -> 0 weakly, bump at (-2/3,-1) r 0.5",
      suites::run_weak_limits(SolutionKind::EIV, {-2.0 / 3.0, -1.0, 0.5, 1.0}, {}, opt));
  o.note("EIII at the fixed point (1,-1) is exactly 0 for every b in the sequence; see README");
  return o;
}

// Criterion 8
Outcome log_singularity() {
  Outcome o;
  const auto fit = verify::log_singularity_fit(geometry::source_from_b(-1.0), {4.0 / 3.0, -1.0}, {1.0, 1.0},
                                               {1e-2, 1e-3, 1e-4, 1e-5, 1e-6});
  std::string sl;
  for (double v : fit.slopes) sl += fmt::format(" {:.5f}", v);
  o.expect(fit.spread <= 0.1, fmt::format("slopes d|E|/d log d per decade:{}; spread {:.3e}", sl, fit.spread));
  return o;
}

// Criterion 9
Outcome geometry_properties() {
  Outcome o;
  const auto s = geometry::source_from_b(-1.0);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ux(-4.0, 4.0);
  std::uniform_real_distribution<double> uy(-4.0, 1.5);
  std::uniform_real_distribution<double> ud(-1.0, 1.0);
  double worst_rt = 0.0;
  int mirror = 0;
  int partition = 0;
  int perturb = 0;
  const double eps = geometry::default_eps(s);
  for (int i = 0; i < 100000; ++i) {
    const PhysPoint p{ux(rng), uy(rng)};
    if (p.y <= 0.0) {
      const PhysPoint r = geometry::from_char(geometry::to_char(p));
      worst_rt = std::max(worst_rt, std::hypot(r.x - p.x, r.y - p.y) / std::hypot(p.x, p.y));
    }
    const auto r = geometry::classify(p, s);
    if (r.tag != geometry::mirror(geometry::classify({-p.x, p.y}, s).tag)) ++mirror;
    if (geometry::is_interior(r.tag) ? r.adjacent != geometry::region_bit(r.tag) : r.adjacent == 0) ++partition;
    if (geometry::is_interior(r.tag)) {
      const auto q = geometry::classify({p.x + 0.35 * eps * ud(rng), p.y + 0.35 * eps * ud(rng)}, s);
      if (geometry::is_interior(q.tag) && q.tag != r.tag) ++perturb;
    }
  }
  o.expect(worst_rt <= 1e-12, fmt::format("round trip max relative error {:.3e}", worst_rt));
  o.expect(mirror == 0, fmt::format("mirror violations {}", mirror));
  o.expect(partition == 0, fmt::format("partition violations {}", partition));
  o.expect(perturb == 0, fmt::format("half-eps perturbation violations {}", perturb));
  return o;
}

// Criterion 10
std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(TRICOMI_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  const char* cmds[] = {
      "eval --b -1 --x 0.3 --y 0.7 --solution EII",
      "verify --b -1 --solution EIII --bump-cx 0.19 --bump-cy -0.8 --bump-r 0.5",
      "limits --solution ESHARP --x 0 --y 1",
      "riemann --b -0.5",
  };
  for (const char* c : cmds) {
    const auto a = run_cli(c);
    const auto b = run_cli(c);
    o.expect(a == b && !a.second.empty(), fmt::format("`{}` twice: identical output and exit code {}", c, a.first));
  }
  const std::string g1 = "acceptance_grid_1.csv";
  const std::string g2 = "acceptance_grid_2.csv";
  const std::string flags = "grid --b -1 --solution E --xmin -3 --xmax 3 --ymin -2 --ymax 1 --nx 120 --ny 90 --out ";
  run_cli(flags + g1);
  ::setenv("TRICOMI_THREADS", "3", 1);
  run_cli(flags + g2);
  ::unsetenv("TRICOMI_THREADS");
  const std::string a = slurp(g1);
  o.expect(!a.empty() && a == slurp(g2), fmt::format("grid CSV byte-identical across runs ({} bytes)", a.size()));
  std::remove(g1.c_str());
  std::remove(g2.c_str());
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "hypergeometric cross-regime agreement", hypergeometric_regimes},
      {2, "Gauss value at 1", gauss_value},
      {3, "Riemann function characteristic conditions", riemann},
      {4, "PDE annihilation residuals", pde_residuals},
      {5, "closed-form characteristic and axis values", closed_forms},
      {6, "distributional identities", distributional},
      {7, "limits as b -> 0", limits},
      {8, "logarithmic singularity on reflected characteristics", log_singularity},
      {9, "geometry round trips, partition and mirror symmetry", geometry_properties},
      {10, "CLI determinism", determinism},
  };
  int passed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, fmt::format("exception: {}", e.what()));
    }
    std::printf("%s %d: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title);
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    passed += o.pass;
  }
  std::printf("acceptance: %d/10 criteria passed\n", passed);
  return passed == 10 ? 0 : 1;
}
