#include <array>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "tricomi/error.hpp"
#include "tricomi/specfun.hpp"

namespace tricomi::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Lanczos sum for x >= 1/2, split power to avoid overflow up to x ~ 171.
double gamma_lanczos(double x) {
  const double xm = x - 1.0;
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (xm + static_cast<double>(i));
  const double t = xm + kLanczosG + 0.5;
  const double half = std::pow(t, 0.5 * (xm + 0.5));
  return std::sqrt(2.0 * kPi) * half * (half * std::exp(-t)) * acc;
}

cplx gamma_lanczos(cplx z) {
  const cplx zm = z - 1.0;
  cplx acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (zm + static_cast<double>(i));
  const cplx t = zm + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((zm + 0.5) * std::log(t) - t) * acc;
}

}  // namespace

double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  // r in [0, 2): fold to [-1/2, 1/2] around the nearest multiple of 1/2.
  if (r <= 0.25) return std::sin(kPi * r);
  if (r <= 0.75) return std::cos(kPi * (r - 0.5));
  if (r <= 1.25) return -std::sin(kPi * (r - 1.0));
  if (r <= 1.75) return -std::cos(kPi * (r - 1.5));
  return std::sin(kPi * (r - 2.0));
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

double gamma(double x) {
  if (!std::isfinite(x)) fail(ErrorCode::Domain, fmt::format("gamma: non-finite argument {}", x));
  if (is_nonpositive_integer(x)) fail(ErrorCode::Domain, fmt::format("gamma: pole at {}", x));
  if (x < 0.5) return kPi / (sin_pi(x) * gamma_lanczos(1.0 - x));
  return gamma_lanczos(x);
}

cplx gamma(cplx z) {
  if (z.imag() == 0.0) return gamma(z.real());
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * gamma_lanczos(1.0 - z));
  return gamma_lanczos(z);
}

double digamma(double x) {
  if (!std::isfinite(x)) fail(ErrorCode::Domain, fmt::format("digamma: non-finite argument {}", x));
  if (is_nonpositive_integer(x)) fail(ErrorCode::Domain, fmt::format("digamma: pole at {}", x));
  if (x < 0.5) return digamma(1.0 - x) - kPi * cos_pi(x) / sin_pi(x);
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double r = 1.0 / (x * x);
  const double series =
      r * (1.0 / 12 -
           r * (1.0 / 120 -
                r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r / 12))))));
  return shift + std::log(x) - 0.5 / x - series;
}

}  // namespace tricomi::specfun
