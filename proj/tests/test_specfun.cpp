#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "golden_values.hpp"
#include "tricomi/error.hpp"
#include "tricomi/specfun.hpp"

using namespace tricomi;
using namespace tricomi::specfun;
namespace specfun = tricomi::specfun;

namespace {

double rel(cplx got, cplx want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }
double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

}  // namespace

TEST_CASE("gamma: trivial and golden values") {
  CHECK(rel(specfun::gamma(1.0), 1.0) < 1e-14);
  CHECK(rel(specfun::gamma(0.5), std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(rel(specfun::gamma(2.0 / 3.0), golden::kGammaTwoThirds) < 1e-13);
  CHECK(rel(specfun::gamma(5.0 / 6.0), golden::kGammaFiveSixths) < 1e-13);
  CHECK(rel(specfun::gamma(1.0 / 6.0), golden::kGammaOneSixth) < 1e-13);
  CHECK(rel(specfun::gamma(-7.3), golden::kGammaMinus7p3) < 1e-13);
  CHECK(rel(specfun::gamma(-19.5), golden::kGammaMinus19p5) < 1e-13);
  CHECK(rel(specfun::gamma(42.25), golden::kGamma42p25) < 1e-13);
}

TEST_CASE("gamma: complex argument") {
  CHECK(rel(specfun::gamma(cplx(0.3, 1.7)), golden::kGammaComplex) < 1e-13);
  CHECK(rel(specfun::gamma(cplx(-2.6, 0.4)), golden::kGammaComplexNeg) < 1e-13);
}

TEST_CASE("gamma: recurrence across [-20, 50]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-20.0, 49.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng);
    if (std::abs(x - std::round(x)) < 1e-3) continue;
    CHECK(rel(specfun::gamma(x + 1.0), x * specfun::gamma(x)) < 2e-13);
  }
}

TEST_CASE("gamma and digamma: poles raise a domain error") {
  for (double x : {0.0, -1.0, -7.0}) {
    CHECK_THROWS_AS(specfun::gamma(x), Error);
    CHECK_THROWS_AS(specfun::digamma(x), Error);
  }
  try {
    specfun::gamma(-3.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Domain);
  }
}

TEST_CASE("digamma: trivial, reflection and golden values") {
  constexpr double euler = 0.57721566490153286061;
  CHECK(rel(specfun::digamma(1.0), -euler) < 1e-14);
  CHECK(rel(specfun::digamma(0.5), -euler - 2.0 * std::log(2.0)) < 1e-14);
  CHECK(rel(specfun::digamma(-1.0 / 6.0), golden::kDigammaMinusSixth) < 1e-12);
  CHECK(rel(specfun::digamma(5.0 / 6.0), golden::kDigammaFiveSixths) < 1e-12);
  CHECK(rel(specfun::digamma(-12.7), golden::kDigammaMinus12p7) < 1e-12);
  CHECK(rel(specfun::digamma(33.3), golden::kDigamma33p3) < 1e-12);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-20.0, 49.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng);
    if (std::abs(x - std::round(x)) < 1e-3) continue;
    CHECK(std::abs(specfun::digamma(x + 1.0) - specfun::digamma(x) - 1.0 / x) < 1e-11 * (1.0 + std::abs(1.0 / x)));
  }
}

TEST_CASE("f_series: values") {
  CHECK(f_series(kF16Params, 0.0) == cplx(1.0, 0.0));
  // Brute-force partial sums of ((1/6)_n / n!)^2 2^{-n}.
  double term = 1.0;
  double sum = 0.0;
  for (int n = 0; n < 60; ++n) {
    sum += term;
    term *= std::pow((1.0 / 6.0 + n) / (n + 1.0), 2) * 0.5;
  }
  CHECK(rel(f_series(kF16Params, 0.5), sum) < 1e-14);
  CHECK(rel(f_series(kF16Params, 0.5), golden::kF16Half) < 1e-14);
  CHECK(rel(f_series(kF16Params, -1.0), f_pfaff(kF16Params, -1.0)) < 1e-13);
  CHECK(rel(f_series(kF16Params, -1.0), golden::kF16MinusOne) < 1e-13);
  const cplx e3 = std::polar(1.0, std::numbers::pi / 3.0);
  CHECK(rel(f_series(kF16Params, e3), golden::kF16Exp) < 1e-12);
}

TEST_CASE("f_series: domain") {
  CHECK_THROWS_AS(f_series(kF16Params, 1.0), Error);
  CHECK_THROWS_AS(f_series(kF16Params, 1.5), Error);
  CHECK_THROWS_AS(f_series(kF76Params, cplx(0.0, 1.0)), Error);
}

TEST_CASE("f_at_one") {
  const double want = specfun::gamma(2.0 / 3.0) / (specfun::gamma(5.0 / 6.0) * specfun::gamma(5.0 / 6.0));
  CHECK(rel(f_at_one(kF16Params), want) < 1e-14);
  CHECK(rel(f_at_one(kF16Params), golden::kF16AtOne) < 1e-13);
  CHECK(f_at_one({0.0, 0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(f_at_one(kF76Params), Error);
}

TEST_CASE("continuation coefficients") {
  const auto f16c = continuation_coeffs(1.0 / 6.0, 1.0, 4);
  const double g = specfun::gamma(1.0 / 6.0) * specfun::gamma(5.0 / 6.0);
  CHECK(rel(f16c[0].u_n, 1.0 / g) < 1e-14);
  CHECK(rel(f16c[0].u_n, 1.0 / (2.0 * std::numbers::pi)) < 1e-14);
  CHECK(rel(f16c[0].h_n, golden::kH0) < 1e-13);
  CHECK(rel(f16c[0].h_n, 2.0 * specfun::digamma(1.0) - specfun::digamma(1.0 / 6.0) - specfun::digamma(5.0 / 6.0)) < 1e-15);
  for (const auto& c : f16c) {
    CHECK(rel(c.v_n, c.u_n * c.h_n) < 1e-15);
    const double h = 2.0 * specfun::digamma(1.0 + c.n) - specfun::digamma(1.0 / 6.0 + c.n) - specfun::digamma(5.0 / 6.0 - c.n);
    CHECK(rel(c.h_n, h) < 1e-12);
  }
  const auto f76c = continuation_coeffs(7.0 / 6.0, 2.0, 1);
  CHECK(rel(f76c[0].u_n, 6.0 / g) < 1e-14);
  CHECK(rel(f76c[0].u_n, 3.0 / std::numbers::pi) < 1e-14);
}

TEST_CASE("f_continuation_log: against Pfaff and golden values") {
  CHECK(rel(f_continuation_log(1.0 / 6.0, 1.0, -10.0), f_pfaff(kF16Params, -10.0)) < 1e-10);
  CHECK(rel(f_continuation_log(1.0 / 6.0, 1.0, -10.0), golden::kF16MinusTen) < 1e-13);
  CHECK(rel(f_continuation_log(7.0 / 6.0, 2.0, -10.0), f_pfaff(kF76Params, -10.0)) < 1e-10);
  CHECK(rel(f_continuation_log(7.0 / 6.0, 2.0, -10.0), golden::kF76MinusTen) < 1e-13);
  CHECK_THROWS_AS(f_continuation_log(1.0 / 6.0, 1.0, 0.5), Error);
}

TEST_CASE("f16 dispatcher: values and cut sides") {
  CHECK(f16(0.0) == cplx(1.0, 0.0));
  CHECK(rel(f16(1.0), golden::kF16AtOne) < 1e-13);
  CHECK(rel(f16(cplx(0.7, 0.9)), golden::kF16Complex) < 1e-12);
  CHECK(rel(f16(1.2, CutSide::Above), golden::kF16Above1p2) < 1e-12);
  CHECK(rel(f16(3.0, CutSide::Above), golden::kF16Above3) < 1e-12);
  CHECK(rel(f16(3.0, CutSide::Below), golden::kF16Below3) < 1e-12);
  // One-sided cut limits agree with nearby off-axis values.
  CHECK(std::abs(f16(cplx(3.0, 1e-9)) - f16(3.0, CutSide::Above)) < 1e-8);
  CHECK(std::abs(f16(cplx(1.2, -1e-9)) - f16(1.2, CutSide::Below)) < 1e-7);
  const cplx e3 = std::polar(1.0, std::numbers::pi / 3.0);
  CHECK(rel(f16(e3), f_connection(kF16Params, e3)) < 1e-10);
  CHECK(rel(f16(e3), golden::kF16Exp) < 1e-12);
}

TEST_CASE("f76 dispatcher: values and exclusion at 1") {
  CHECK(f76(0.0) == cplx(1.0, 0.0));
  CHECK(rel(f76(-2.0), golden::kF76MinusTwo) < 1e-12);
  CHECK(rel(f76(cplx(-0.4, 1.3)), golden::kF76Complex) < 1e-12);
  CHECK_THROWS_AS(f76(1.0), Error);
  CHECK_THROWS_AS(f76(cplx(1.0, 1e-12)), Error);
  const double h = 1e-4;
  const cplx fd = 36.0 * (f16(-2.0 + h) - f16(-2.0 - h)) / (2.0 * h);
  CHECK(std::abs(fd - f76(-2.0)) < 1e-6);
  CHECK(rel(f76(-10.0), f_pfaff(kF76Params, -10.0)) < 1e-10);
}

TEST_CASE("f16: real on the real axis below 1") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-50.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const cplx v = f16(u(rng));
    CHECK(std::abs(v.imag()) <= 1e-12 * std::abs(v));
  }
}

TEST_CASE("f16: derivative relation is second order") {
  for (cplx z : {cplx(-3.0, 0.0), cplx(0.3, 0.2), cplx(-0.8, 1.1), cplx(2.0, 1.5)}) {
    auto err = [&](double h) {
      return std::abs(36.0 * (f16(z + h) - f16(z - h)) / (2.0 * h) - f76(z));
    };
    const double e1 = err(1e-2);
    const double e2 = err(5e-3);
    CHECK(e1 / e2 > 3.5);
  }
}

TEST_CASE("f16: satisfies the hypergeometric equation") {
  for (cplx z : {cplx(-5.0, 0.0), cplx(0.4, 0.0), cplx(0.2, 0.9), cplx(1.7, -0.8), cplx(-0.6, -1.2)}) {
    const double h = 1e-3;
    const cplx f = f16(z);
    const cplx fp = f76(z) / 36.0;
    const cplx fpp = (f76(z + h) - f76(z - h)) / (2.0 * h * 36.0);
    const cplx res = z * (1.0 - z) * fpp + (1.0 - 4.0 / 3.0 * z) * fp - f / 36.0;
    CHECK(std::abs(res) < 1e-7);
  }
}

TEST_CASE("regime overlap agreement on random points") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double two_pi = 2.0 * std::numbers::pi;
  auto max_rel = [&](auto draw, auto lhs, auto rhs) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const cplx z = draw();
      worst = std::max(worst, rel(lhs(z), rhs(z)));
    }
    return worst;
  };
  // Series vs connection: |z| <= 0.9 and |1 - z| <= 0.5.
  auto draw_sc = [&] {
    for (;;) {
      const cplx z = 1.0 - std::polar(0.5 * std::sqrt(u01(rng)), two_pi * u01(rng));
      if (std::abs(z) <= 0.9) return z;
    }
  };
  CHECK(max_rel(draw_sc, [](cplx z) { return f_series(kF16Params, z); },
                [](cplx z) { return f_connection(kF16Params, z); }) < 1e-10);
  // Series vs Pfaff: Re z < 1/2, |z| <= 0.9.
  auto draw_sp = [&] {
    for (;;) {
      const cplx z = std::polar(0.9 * std::sqrt(u01(rng)), two_pi * u01(rng));
      if (z.real() < 0.5) return z;
    }
  };
  CHECK(max_rel(draw_sp, [](cplx z) { return f_series(kF16Params, z); },
                [](cplx z) { return f_pfaff(kF16Params, z); }) < 1e-10);
  // Continuation vs Pfaff: |z| >= 1.4, Re z < 1/2 and |z/(z-1)| < 1.
  auto draw_cp = [&] {
    for (;;) {
      const cplx z = std::polar(1.4 + 8.0 * u01(rng), two_pi * u01(rng));
      if (z.real() < 0.4 && std::abs(z / (z - 1.0)) <= 0.9) return z;
    }
  };
  CHECK(max_rel(draw_cp, [](cplx z) { return f_continuation_log(1.0 / 6.0, 1.0, z); },
                [](cplx z) { return f_pfaff(kF16Params, z); }) < 1e-10);
  // Continuation vs connection: |z| > 1, |1 - z| <= 0.5, off the cut.
  auto draw_cc = [&] {
    for (;;) {
      const cplx z = 1.0 - std::polar(0.5 * std::sqrt(u01(rng)), two_pi * u01(rng));
      if (std::abs(z) > 1.05 && std::abs(z.imag()) > 1e-3) return z;
    }
  };
  CHECK(max_rel(draw_cc, [](cplx z) { return f_continuation_log(1.0 / 6.0, 1.0, z); },
                [](cplx z) { return f_connection(kF16Params, z); }) < 1e-10);
  // Unit circle: series (Euler tail) vs connection or continuation.
  auto draw_uc = [&] {
    for (;;) {
      const cplx z = std::polar(1.0, two_pi * u01(rng));
      if (std::abs(1.0 - z) > 0.3 && std::abs(1.0 - z) < 0.5) return z;
    }
  };
  CHECK(max_rel(draw_uc, [](cplx z) { return f_series(kF16Params, z); },
                [](cplx z) { return f_connection(kF16Params, z); }) < 1e-10);
}
