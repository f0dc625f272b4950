#pragma once

// Closed-form fundamental solutions of the Tricomi operator y d_xx + d_yy.

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

#include "tricomi/geometry.hpp"
#include "tricomi/specfun.hpp"

namespace tricomi::fundsol {

using cplx = std::complex<double>;
using geometry::CharPoint;
using geometry::PhysPoint;
using geometry::Region;
using geometry::Source;

enum class SolutionKind : std::uint8_t {
  Eraw,
  EI,
  EII,
  EIII,
  EIV,
  ESharp,
  EConj,
  EReal,
  FPlus,
  FMinus,
  RiemannR,
  HomogeneousU,
};

std::string_view kind_name(SolutionKind kind);
// Accepts the names printed by kind_name plus the CLI spellings (E, ESHARP, ...).
std::optional<SolutionKind> kind_from_name(std::string_view name);

// Coefficients of E# = lambda E_II + mu conj(E_II).
struct SharpCoeffs {
  cplx lambda;
  cplx mu;
};
SharpCoeffs sharp_coeffs();

double f16_at_one();  // Gamma(2/3) / Gamma(5/6)^2
double c_plus();      // -2^{-1/3} 3^{-1/2} F(1/6,1/6;1;1)
double c_minus();     // 2^{-1/3} F(1/6,1/6;1;1)

// (l - m0)^{-1/6} (l0 - m)^{-1/6} F(1/6,1/6;1;zeta). A negative base w is
// read as |w| e^{-i pi}, so w^{-1/6} = |w|^{-1/6} e^{i pi / 6}.
cplx eval_E_general(double l, double m, double l0, double m0,
                    specfun::CutSide side = specfun::CutSide::Above);

// (l - m)^{1/3} E(l, m; l0, m0); real in the dependency region of (l0, m0).
double riemann_R(double l, double m, double l0, double m0);

// E relative to (0, b): e^{i pi/6} z^{-1/6} F(zeta) with z = rho e^{i theta}.
cplx eval_E_phys(PhysPoint p, const Source& s);

// Same function on y <= 0 in characteristic coordinates (no classification).
cplx eval_E_char(CharPoint q, const Source& s);

struct EGrad {
  cplx e;
  cplx e_l;
  cplx e_m;
};
EGrad eval_E_char_grad(CharPoint q, const Source& s);

// Physical gradient (E_x, E_y) on y < 0.
struct EPhysGrad {
  cplx e;
  cplx e_x;
  cplx e_y;
};
EPhysGrad eval_E_phys_grad(PhysPoint p, const Source& s);

struct Evaluation {
  cplx value;
  Region region;
};

// Kind-restricted evaluation. FPlus and FMinus are relative to the origin
// and ignore `s`. Throws Error(SingularLocus) on singular boundaries of the
// kind's support.
Evaluation eval_solution(SolutionKind kind, PhysPoint p, const Source& s);

// Region bits (geometry::RegionBit) on which `kind` may be nonzero.
std::uint8_t support_mask(SolutionKind kind);

// Maps a raw E value inside the support to the kind's value.
cplx apply_kind(SolutionKind kind, cplx e_raw);

// l^{-1/6} F(1/6,1/6;1;m/l), l > 0, m/l < 1.
double homogeneous_u(double l, double m);

// Value of F_+ or F_- at a point (zero outside the respective region).
double f_plus(PhysPoint p);
double f_minus(PhysPoint p);

}  // namespace tricomi::fundsol
