#ifndef TRICOMI_TRICOMI_H
#define TRICOMI_TRICOMI_H

/* C interface to the Tricomi fundamental-solution library.
 *
 * Every fallible call returns a tricomi_status. On failure the message is
 * available from tricomi_last_error() on the calling thread until the next
 * call into the library from that thread. Handles are opaque and must be
 * released with the matching destroy function. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TRICOMI_BUILDING_LIBRARY)
#    define TRICOMI_API __declspec(dllexport)
#  else
#    define TRICOMI_API __declspec(dllimport)
#  endif
#else
#  define TRICOMI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tricomi_status {
  TRICOMI_OK = 0,
  TRICOMI_ERR_DOMAIN = 1,
  TRICOMI_ERR_SINGULAR = 2,
  TRICOMI_ERR_NONCONVERGENCE = 3,
  TRICOMI_ERR_TOLERANCE = 4,
  TRICOMI_ERR_INVALID_ARGUMENT = 5,
  TRICOMI_ERR_IO = 6,
  TRICOMI_ERR_INTERNAL = 7
} tricomi_status;

typedef enum tricomi_solution {
  TRICOMI_E = 0,
  TRICOMI_EI,
  TRICOMI_EII,
  TRICOMI_EIII,
  TRICOMI_EIV,
  TRICOMI_ESHARP,
  TRICOMI_ECONJ,
  TRICOMI_EREAL,
  TRICOMI_FPLUS,
  TRICOMI_FMINUS,
  TRICOMI_RIEMANN_R,
  TRICOMI_HOMOGENEOUS_U
} tricomi_solution;

typedef enum tricomi_region {
  TRICOMI_REGION_DI = 0,
  TRICOMI_REGION_DII,
  TRICOMI_REGION_DIII,
  TRICOMI_REGION_DIV,
  TRICOMI_REGION_ON_SOURCE_CHARACTERISTIC,
  TRICOMI_REGION_ON_REFLECTED_CHARACTERISTIC,
  TRICOMI_REGION_ON_AXIS,
  TRICOMI_REGION_DPLUS,
  TRICOMI_REGION_DMINUS,
  TRICOMI_REGION_ON_ORIGIN_CHARACTERISTIC
} tricomi_region;

typedef struct tricomi_source tricomi_source;
typedef struct tricomi_report tricomi_report;

typedef struct tricomi_bump {
  double cx, cy, r, amp;
} tricomi_bump;

typedef struct tricomi_quad {
  int base_cells_per_axis;
  int gauss_order;
  double grading_exponent;
  double target_tol;
} tricomi_quad;

typedef struct tricomi_grid {
  double xmin, xmax, ymin, ymax;
  int nx, ny;
} tricomi_grid;

TRICOMI_API const char* tricomi_version(void);
TRICOMI_API const char* tricomi_last_error(void);
TRICOMI_API const char* tricomi_status_string(tricomi_status status);

/* Source point (0, b), b <= 0. */
TRICOMI_API tricomi_status tricomi_source_create(double b, tricomi_source** out);
TRICOMI_API void tricomi_source_destroy(tricomi_source* source);
TRICOMI_API tricomi_status tricomi_source_params(const tricomi_source* source, double* b, double* a,
                                                 double* l0);

/* Case-insensitive: E, EI, EII, EIII, EIV, ESHARP, ECONJ, EREAL, FPLUS, FMINUS,
 * RIEMANNR, HOMOGENEOUSU. */
TRICOMI_API tricomi_status tricomi_solution_from_name(const char* name, tricomi_solution* out);
TRICOMI_API const char* tricomi_solution_name(tricomi_solution kind);
TRICOMI_API const char* tricomi_region_name(tricomi_region region);

TRICOMI_API tricomi_status tricomi_classify(const tricomi_source* source, double x, double y,
                                            tricomi_region* region);
/* region may be NULL. */
TRICOMI_API tricomi_status tricomi_eval(const tricomi_source* source, tricomi_solution kind, double x,
                                        double y, double* re, double* im, tricomi_region* region);

/* F(1/6,1/6;1;z); cut_side > 0 takes the limit from above on [1, inf). */
TRICOMI_API tricomi_status tricomi_hyp_f16(double z_re, double z_im, int cut_side, double* re, double* im);

TRICOMI_API tricomi_status tricomi_grid_csv(const tricomi_source* source, tricomi_solution kind,
                                            const tricomi_grid* grid, const char* path, long* rows);

TRICOMI_API void tricomi_quad_default(tricomi_quad* quad);

TRICOMI_API tricomi_status tricomi_run_verify(const tricomi_source* source, tricomi_solution kind,
                                              const tricomi_bump* bump, const tricomi_quad* quad, double tol,
                                              tricomi_report** out);
TRICOMI_API tricomi_status tricomi_run_residual(const tricomi_source* source, double h, int points,
                                                uint64_t seed, tricomi_report** out);
TRICOMI_API tricomi_status tricomi_run_riemann(const tricomi_source* source, double h, tricomi_report** out);
/* b = -2^-k for k in [k_first, k_last]. */
TRICOMI_API tricomi_status tricomi_run_limits(tricomi_solution kind, double x, double y, int k_first,
                                              int k_last, tricomi_report** out);
TRICOMI_API tricomi_status tricomi_run_weak_limits(tricomi_solution kind, const tricomi_bump* bump,
                                                   const tricomi_quad* quad, int k_first, int k_last,
                                                   tricomi_report** out);

TRICOMI_API int tricomi_report_passed(const tricomi_report* report);
TRICOMI_API size_t tricomi_report_metric_count(const tricomi_report* report);
TRICOMI_API tricomi_status tricomi_report_metric(const tricomi_report* report, size_t index, const char** name,
                                                 double* value, double* tolerance, int* passed);
/* Valid until the report is destroyed. */
TRICOMI_API const char* tricomi_report_json(const tricomi_report* report);
TRICOMI_API void tricomi_report_destroy(tricomi_report* report);

#ifdef __cplusplus
}
#endif

#endif
