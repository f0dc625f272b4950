// Command-line front end over the C API.
//
// Exit codes: 0 success, 1 verification failed, 2 bad arguments,
// 3 singular locus or numerical non-convergence.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tricomi/tricomi.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

int exit_for(tricomi_status st) {
  switch (st) {
    case TRICOMI_OK: return kExitOk;
    case TRICOMI_ERR_DOMAIN:
    case TRICOMI_ERR_INVALID_ARGUMENT:
    case TRICOMI_ERR_IO: return kExitUsage;
    default: return kExitNumeric;
  }
}

int report_error(tricomi_status st) {
  std::fprintf(stderr, "error: %s: %s\n", tricomi_status_string(st), tricomi_last_error());
  return exit_for(st);
}

struct SourceHandle {
  tricomi_source* p = nullptr;
  ~SourceHandle() { tricomi_source_destroy(p); }
};

struct ReportHandle {
  tricomi_report* p = nullptr;
  ~ReportHandle() { tricomi_report_destroy(p); }
};

int finish_report(tricomi_status st, ReportHandle& r) {
  if (st != TRICOMI_OK) return report_error(st);
  std::printf("%s\n", tricomi_report_json(r.p));
  return tricomi_report_passed(r.p) ? kExitOk : kExitFailed;
}

struct BumpArgs {
  double cx = 0.0;
  double cy = -1.0;
  double r = 0.5;
  double amp = 1.0;
};

void add_bump_flags(CLI::App* cmd, BumpArgs& b) {
  cmd->add_option("--bump-cx", b.cx, "Bump center x")->capture_default_str();
  cmd->add_option("--bump-cy", b.cy, "Bump center y")->capture_default_str();
  cmd->add_option("--bump-r", b.r, "Bump support radius")->capture_default_str();
  cmd->add_option("--bump-amp", b.amp, "Bump amplitude")->capture_default_str();
}

void add_quad_flags(CLI::App* cmd, tricomi_quad& q) {
  cmd->add_option("--cells", q.base_cells_per_axis, "Base quadrature cells per axis")->capture_default_str();
  cmd->add_option("--order", q.gauss_order, "Gauss-Legendre order per cell")->capture_default_str();
  cmd->add_option("--grading", q.grading_exponent, "Grading exponent toward cell edges")->capture_default_str();
  cmd->add_option("--quad-tol", q.target_tol, "Quadrature refinement tolerance")->capture_default_str();
}

const std::vector<std::string> kSolutionNames{"E",      "EI",     "EII",   "EIII",  "EIV",      "ESHARP",
                                              "ECONJ",  "EREAL",  "FPLUS", "FMINUS", "RIEMANNR", "HOMOGENEOUSU"};

tricomi_solution parse_solution(const std::string& name) {
  tricomi_solution k{};
  if (tricomi_solution_from_name(name.c_str(), &k) != TRICOMI_OK)
    throw CLI::ValidationError("--solution", tricomi_last_error());
  return k;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental solutions of the Tricomi operator y d_xx + d_yy"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  double b = 0.0;
  std::string solution = "E";
  auto add_b = [&](CLI::App* c) { c->add_option("--b", b, "Source ordinate b <= 0")->required(); };
  auto add_solution = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("--solution", solution, "Solution kind")->transform(CLI::IsMember(kSolutionNames, CLI::ignore_case));
    if (required) o->required();
  };

  // eval
  double x = 0.0;
  double y = 0.0;
  std::string format = "json";
  auto* eval = app.add_subcommand("eval", "Evaluate one solution at one point");
  add_b(eval);
  add_solution(eval, true);
  eval->add_option("--x", x)->required();
  eval->add_option("--y", y)->required();
  eval->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  // grid
  tricomi_grid grid{-2.0, 2.0, -2.0, 2.0, 101, 101};
  std::string out_path;
  auto* gridc = app.add_subcommand("grid", "Sample a solution on a grid of cell centers into CSV");
  add_b(gridc);
  add_solution(gridc, true);
  gridc->add_option("--xmin", grid.xmin)->capture_default_str();
  gridc->add_option("--xmax", grid.xmax)->capture_default_str();
  gridc->add_option("--ymin", grid.ymin)->capture_default_str();
  gridc->add_option("--ymax", grid.ymax)->capture_default_str();
  gridc->add_option("--nx", grid.nx)->capture_default_str();
  gridc->add_option("--ny", grid.ny)->capture_default_str();
  gridc->add_option("--out", out_path, "Output CSV path")->required();

  // verify
  BumpArgs bump;
  tricomi_quad quad{};
  tricomi_quad_default(&quad);
  double tol = 1e-2;
  auto* verifyc = app.add_subcommand("verify", "Check <E, T phi> = phi(0, b) by quadrature");
  add_b(verifyc);
  add_solution(verifyc, true);
  add_bump_flags(verifyc, bump);
  add_quad_flags(verifyc, quad);
  verifyc->add_option("--tol", tol, "Relative tolerance on the pairing")->capture_default_str();

  // residual
  double h = 1e-3;
  int points = 100;
  std::uint64_t seed = 1;
  auto* residual = app.add_subcommand("residual", "Finite-difference residuals of every operator form");
  add_b(residual);
  residual->add_option("--h", h)->capture_default_str();
  residual->add_option("--points", points, "Random points per region")->capture_default_str();
  residual->add_option("--seed", seed)->capture_default_str();

  // riemann
  auto* riemann = app.add_subcommand("riemann", "Characteristic conditions of the Riemann function");
  add_b(riemann);
  riemann->add_option("--h", h)->capture_default_str();

  // limits
  std::optional<double> lx;
  std::optional<double> ly;
  int k_first = 1;
  int k_last = 6;
  auto* limits = app.add_subcommand("limits", "Deviation from the b -> 0 limit along b = -2^-k");
  add_solution(limits, true);
  limits->add_option("--x", lx, "Point x (pointwise study)");
  limits->add_option("--y", ly, "Point y (pointwise study)");
  auto* weak = limits->add_flag("--weak", "Weak study against the bump instead of a point");
  add_bump_flags(limits, bump);
  add_quad_flags(limits, quad);
  limits->add_option("--k-first", k_first)->capture_default_str();
  limits->add_option("--k-last", k_last)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    SourceHandle src;
    auto make_source = [&] { return tricomi_source_create(b, &src.p); };

    if (eval->parsed()) {
      const auto kind = parse_solution(solution);
      if (auto st = make_source(); st != TRICOMI_OK) return report_error(st);
      double re = 0.0;
      double im = 0.0;
      tricomi_region region{};
      if (auto st = tricomi_eval(src.p, kind, x, y, &re, &im, &region); st != TRICOMI_OK) return report_error(st);
      const char* rn = tricomi_region_name(region);
      if (format == "csv")
        std::printf("%.17g,%.17g,%.17g,%.17g,%s\n", x, y, re, im, rn);
      else
        std::printf("{\"x\":%.17g,\"y\":%.17g,\"re\":%.17g,\"im\":%.17g,\"region\":\"%s\"}\n", x, y, re, im, rn);
      return kExitOk;
    }
    if (gridc->parsed()) {
      const auto kind = parse_solution(solution);
      if (auto st = make_source(); st != TRICOMI_OK) return report_error(st);
      long rows = 0;
      if (auto st = tricomi_grid_csv(src.p, kind, &grid, out_path.c_str(), &rows); st != TRICOMI_OK)
        return report_error(st);
      std::fprintf(stderr, "wrote %ld rows to %s\n", rows, out_path.c_str());
      return kExitOk;
    }
    const tricomi_bump tb{bump.cx, bump.cy, bump.r, bump.amp};
    ReportHandle rep;
    if (verifyc->parsed()) {
      const auto kind = parse_solution(solution);
      if (auto st = make_source(); st != TRICOMI_OK) return report_error(st);
      return finish_report(tricomi_run_verify(src.p, kind, &tb, &quad, tol, &rep.p), rep);
    }
    if (residual->parsed()) {
      if (auto st = make_source(); st != TRICOMI_OK) return report_error(st);
      return finish_report(tricomi_run_residual(src.p, h, points, seed, &rep.p), rep);
    }
    if (riemann->parsed()) {
      if (auto st = make_source(); st != TRICOMI_OK) return report_error(st);
      return finish_report(tricomi_run_riemann(src.p, h, &rep.p), rep);
    }
    if (limits->parsed()) {
      const auto kind = parse_solution(solution);
      if (weak->count() > 0) return finish_report(tricomi_run_weak_limits(kind, &tb, &quad, k_first, k_last, &rep.p), rep);
      if (!lx || !ly) throw CLI::ValidationError("limits", "--x and --y are required unless --weak is given");
      return finish_report(tricomi_run_limits(kind, *lx, *ly, k_first, k_last, &rep.p), rep);
    }
  } catch (const CLI::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
