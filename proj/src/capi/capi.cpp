#include "tricomi/tricomi.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>

#include "tricomi/error.hpp"
#include "tricomi/fundsol.hpp"
#include "tricomi/specfun.hpp"
#include "tricomi/suites.hpp"

struct tricomi_source {
  tricomi::geometry::Source s;
};

struct tricomi_report {
  tricomi::suites::RunReport report;
  std::string json;
};

namespace {

using namespace tricomi;

static_assert(TRICOMI_HOMOGENEOUS_U == static_cast<int>(fundsol::SolutionKind::HomogeneousU));
static_assert(TRICOMI_FPLUS == static_cast<int>(fundsol::SolutionKind::FPlus));
static_assert(TRICOMI_REGION_ON_ORIGIN_CHARACTERISTIC ==
              static_cast<int>(geometry::RegionTag::OnOriginCharacteristic));
static_assert(TRICOMI_REGION_DPLUS == static_cast<int>(geometry::RegionTag::DPlus));

thread_local std::string g_last_error;

tricomi_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::Domain: return TRICOMI_ERR_DOMAIN;
    case ErrorCode::SingularLocus: return TRICOMI_ERR_SINGULAR;
    case ErrorCode::NonConvergence: return TRICOMI_ERR_NONCONVERGENCE;
    case ErrorCode::ToleranceNotMet: return TRICOMI_ERR_TOLERANCE;
    case ErrorCode::InvalidArgument: return TRICOMI_ERR_INVALID_ARGUMENT;
    case ErrorCode::Io: return TRICOMI_ERR_IO;
  }
  return TRICOMI_ERR_INTERNAL;
}

// Runs fn, translating exceptions into a status and the thread-local message.
template <class F>
tricomi_status guarded(F&& fn) {
  g_last_error.clear();
  try {
    fn();
    return TRICOMI_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return TRICOMI_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

fundsol::SolutionKind to_kind(tricomi_solution k) {
  require(k >= TRICOMI_E && k <= TRICOMI_HOMOGENEOUS_U, "unknown solution kind");
  return static_cast<fundsol::SolutionKind>(k);
}

verify::BumpSpec to_bump(const tricomi_bump* b) {
  require(b != nullptr, "bump is null");
  return {b->cx, b->cy, b->r, b->amp};
}

verify::QuadSpec to_quad(const tricomi_quad* q) {
  if (!q) return {};
  return {q->base_cells_per_axis, q->gauss_order, q->grading_exponent, q->target_tol};
}

tricomi_status emit(tricomi_report** out, suites::RunReport&& rep) {
  auto* r = new tricomi_report{std::move(rep), {}};
  r->json = r->report.to_json();
  *out = r;
  return TRICOMI_OK;
}

}  // namespace

extern "C" {

const char* tricomi_version(void) { return "0.1.0"; }

const char* tricomi_last_error(void) { return g_last_error.c_str(); }

const char* tricomi_status_string(tricomi_status status) {
  switch (status) {
    case TRICOMI_OK: return "ok";
    case TRICOMI_ERR_DOMAIN: return "domain error";
    case TRICOMI_ERR_SINGULAR: return "singular locus";
    case TRICOMI_ERR_NONCONVERGENCE: return "non-convergence";
    case TRICOMI_ERR_TOLERANCE: return "tolerance not met";
    case TRICOMI_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TRICOMI_ERR_IO: return "i/o error";
    case TRICOMI_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

tricomi_status tricomi_source_create(double b, tricomi_source** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    const auto s = geometry::source_from_b(b);
    *out = new tricomi_source{s};
  });
}

void tricomi_source_destroy(tricomi_source* source) { delete source; }

tricomi_status tricomi_source_params(const tricomi_source* source, double* b, double* a, double* l0) {
  return guarded([&] {
    require(source != nullptr, "source is null");
    if (b) *b = source->s.b;
    if (a) *a = source->s.a;
    if (l0) *l0 = source->s.l0;
  });
}

tricomi_status tricomi_solution_from_name(const char* name, tricomi_solution* out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    const auto k = fundsol::kind_from_name(name);
    if (!k) fail(ErrorCode::InvalidArgument, std::string("unknown solution name: ") + name);
    *out = static_cast<tricomi_solution>(*k);
  });
}

const char* tricomi_solution_name(tricomi_solution kind) {
  if (kind < TRICOMI_E || kind > TRICOMI_HOMOGENEOUS_U) return "UNKNOWN";
  return fundsol::kind_name(static_cast<fundsol::SolutionKind>(kind)).data();
}

const char* tricomi_region_name(tricomi_region region) {
  if (region < TRICOMI_REGION_DI || region > TRICOMI_REGION_ON_ORIGIN_CHARACTERISTIC) return "Unknown";
  return geometry::region_name(static_cast<geometry::RegionTag>(region)).data();
}

tricomi_status tricomi_classify(const tricomi_source* source, double x, double y, tricomi_region* region) {
  return guarded([&] {
    require(source != nullptr && region != nullptr, "null argument");
    require(std::isfinite(x) && std::isfinite(y), "non-finite point");
    *region = static_cast<tricomi_region>(geometry::classify({x, y}, source->s).tag);
  });
}

tricomi_status tricomi_eval(const tricomi_source* source, tricomi_solution kind, double x, double y, double* re,
                            double* im, tricomi_region* region) {
  return guarded([&] {
    require(source != nullptr && re != nullptr && im != nullptr, "null argument");
    const auto ev = fundsol::eval_solution(to_kind(kind), {x, y}, source->s);
    *re = ev.value.real();
    *im = ev.value.imag();
    if (region) *region = static_cast<tricomi_region>(ev.region.tag);
  });
}

tricomi_status tricomi_hyp_f16(double z_re, double z_im, int cut_side, double* re, double* im) {
  return guarded([&] {
    require(re != nullptr && im != nullptr, "null argument");
    const auto side = cut_side >= 0 ? specfun::CutSide::Above : specfun::CutSide::Below;
    const auto v = specfun::f16({z_re, z_im}, side);
    *re = v.real();
    *im = v.imag();
  });
}

tricomi_status tricomi_grid_csv(const tricomi_source* source, tricomi_solution kind, const tricomi_grid* grid,
                                const char* path, long* rows) {
  return guarded([&] {
    require(source != nullptr && grid != nullptr && path != nullptr, "null argument");
    const suites::GridSpec g{grid->xmin, grid->xmax, grid->ymin, grid->ymax, grid->nx, grid->ny};
    const long n = suites::write_grid_csv(to_kind(kind), source->s, g, path);
    if (rows) *rows = n;
  });
}

void tricomi_quad_default(tricomi_quad* quad) {
  if (!quad) return;
  const verify::QuadSpec q;
  *quad = {q.base_cells_per_axis, q.gauss_order, q.grading_exponent, q.target_tol};
}

tricomi_status tricomi_run_verify(const tricomi_source* source, tricomi_solution kind, const tricomi_bump* bump,
                                  const tricomi_quad* quad, double tol, tricomi_report** out) {
  return guarded([&] {
    require(source != nullptr && out != nullptr, "null argument");
    require(tol > 0.0, "tolerance must be positive");
    suites::VerifyOptions opt{to_bump(bump), to_quad(quad), tol};
    emit(out, suites::run_verify(to_kind(kind), source->s, opt));
  });
}

tricomi_status tricomi_run_residual(const tricomi_source* source, double h, int points, uint64_t seed,
                                    tricomi_report** out) {
  return guarded([&] {
    require(source != nullptr && out != nullptr, "null argument");
    require(h > 0.0, "h must be positive");
    suites::ResidualOptions opt;
    opt.h = h;
    opt.points = points;
    opt.seed = seed;
    emit(out, suites::run_residual(source->s, opt));
  });
}

tricomi_status tricomi_run_riemann(const tricomi_source* source, double h, tricomi_report** out) {
  return guarded([&] {
    require(source != nullptr && out != nullptr, "null argument");
    require(h > 0.0, "h must be positive");
    suites::RiemannOptions opt;
    opt.h = h;
    emit(out, suites::run_riemann(source->s, opt));
  });
}

tricomi_status tricomi_run_limits(tricomi_solution kind, double x, double y, int k_first, int k_last,
                                  tricomi_report** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    suites::LimitOptions opt;
    opt.k_first = k_first;
    opt.k_last = k_last;
    emit(out, suites::run_limits(to_kind(kind), {x, y}, opt));
  });
}

tricomi_status tricomi_run_weak_limits(tricomi_solution kind, const tricomi_bump* bump, const tricomi_quad* quad,
                                       int k_first, int k_last, tricomi_report** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    suites::LimitOptions opt;
    opt.k_first = k_first;
    opt.k_last = k_last;
    emit(out, suites::run_weak_limits(to_kind(kind), to_bump(bump), to_quad(quad), opt));
  });
}

int tricomi_report_passed(const tricomi_report* report) { return report && report->report.passed() ? 1 : 0; }

size_t tricomi_report_metric_count(const tricomi_report* report) {
  return report ? report->report.metrics.size() : 0;
}

tricomi_status tricomi_report_metric(const tricomi_report* report, size_t index, const char** name, double* value,
                                     double* tolerance, int* passed) {
  return guarded([&] {
    require(report != nullptr, "report is null");
    require(index < report->report.metrics.size(), "metric index out of range");
    const auto& m = report->report.metrics[index];
    if (name) *name = m.name.c_str();
    if (value) *value = m.value;
    if (tolerance) *tolerance = m.tolerance;
    if (passed) *passed = m.passed() ? 1 : 0;
  });
}

const char* tricomi_report_json(const tricomi_report* report) { return report ? report->json.c_str() : ""; }

void tricomi_report_destroy(tricomi_report* report) { delete report; }

}  // extern "C"
