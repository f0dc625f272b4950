#pragma once

// Gamma, digamma and the Gauss hypergeometric function for the two parameter
// families the Tricomi fundamental solutions need: F(1/6,1/6;1;z) and its
// derivative family F(7/6,7/6;2;z).

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace tricomi::specfun {

using cplx = std::complex<double>;

struct HypParams {
  double a;
  double b;
  double c;
};

inline constexpr HypParams kF16Params{1.0 / 6.0, 1.0 / 6.0, 1.0};
inline constexpr HypParams kF76Params{7.0 / 6.0, 7.0 / 6.0, 2.0};

// Which one-sided limit to take when z lies on the cut [1, inf).
enum class CutSide { Above = +1, Below = -1 };

enum class Regime { Trivial, GaussValue, Series, Connection, Pfaff, Continuation };

std::string_view regime_name(Regime r);

/// Default per-call tolerance: sum to working precision.
inline constexpr double kMachineTol = 1e-17;
/// Hard cap on the number of series terms (signals "switch regime").
inline constexpr std::size_t kMaxTerms = 1'000'000;

// Lanczos approximation (g = 7, 9 terms) with reflection for x < 1/2.
// Throws Error(Domain) at non-positive integers.
double gamma(double x);
cplx gamma(cplx z);

// Digamma by upward recurrence and the asymptotic series; reflection for x < 1/2.
double digamma(double x);

// sin(pi x) and cos(pi x) with exact argument reduction.
double sin_pi(double x);
double cos_pi(double x);

// Pochhammer-free coefficients of the logarithmic continuation of F(a,a;c;z).
struct ContinuationCoeffs {
  int n;
  double u_n;  // coefficient of z^{-n} in u
  double v_n;  // coefficient of z^{-n} in v (= u_n * h_n)
  double h_n;
};

std::vector<ContinuationCoeffs> continuation_coeffs(double a, double c, int count);

// Direct summation of the hypergeometric series. |z| <= 1, z != 1; on |z| = 1
// requires c - a - b > 0. Near-unit ratios use an Euler-transformed tail.
cplx f_series(const HypParams& p, cplx z, double tol = kMachineTol);

// Gauss: F(a,b;c;1) = G(c)G(c-a-b) / (G(c-a)G(c-b)), requires c - a - b > 0.
double f_at_one(const HypParams& p);

// Two-term expansion about z = 1 (c - a - b must be non-integer).
cplx f_connection(const HypParams& p, cplx z, CutSide side = CutSide::Above,
                  double tol = kMachineTol);

// Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a,c-b;c;z/(z-1)); needs Re z < 1/2.
cplx f_pfaff(const HypParams& p, cplx z, double tol = kMachineTol);

// F(a,a;c;z) = (-z)^{-a} [log(-z) u(z) + v(z)] for |z| > 1.
// Real z > 1 is evaluated as the one-sided limit selected by `side`.
cplx f_continuation_log(double a, double c, cplx z, double tol = kMachineTol,
                        CutSide side = CutSide::Above);

struct HypResult {
  cplx value;
  Regime regime;
};

// Regime dispatcher for F(a,a;c;z).
HypResult hyp_aac(double a, double c, cplx z, CutSide side = CutSide::Above);

inline cplx f16(cplx z, CutSide side = CutSide::Above) {
  return hyp_aac(kF16Params.a, kF16Params.c, z, side).value;
}
// F(7/6,7/6;2;z) = 36 dF16/dz. Diverges at z = 1; a neighbourhood is rejected.
inline cplx f76(cplx z, CutSide side = CutSide::Above) {
  return hyp_aac(kF76Params.a, kF76Params.c, z, side).value;
}

/// Radius around z = 1 in which f76 reports a domain error.
inline constexpr double kF76ExclusionRadius = 1e-9;

}  // namespace tricomi::specfun
