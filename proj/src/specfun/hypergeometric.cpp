#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "tricomi/error.hpp"
#include "tricomi/specfun.hpp"

namespace tricomi::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMinTerms = 8;
constexpr double kGeometricRatio = 0.99;
constexpr std::size_t kEulerBase = 400;
constexpr int kEulerMaxOrder = 30;

// Sums sum_k A_k w^k for coefficients produced one at a time by `next()`.
//
// Once the ratio bound R = |w| max(1, |A_{k+1}/A_k|) drops below 0.99 the
// tail is bounded by |term| R / (1 - R). Otherwise (|w| near or on the unit
// circle) N terms are summed directly and the remainder is Euler-transformed:
//   sum_{k>=N} A_k w^k = w^N / (1 - w) sum_j (w / (1 - w))^j (Delta^j A)_N.
template <class Gen>
cplx sum_power_series(Gen& gen, cplx w, double tol, const char* who) {
  const double absw = std::abs(w);
  const cplx one_minus = 1.0 - w;
  const double q = std::abs(one_minus) > 0 ? absw / std::abs(one_minus) : INFINITY;
  const std::size_t euler_at =
      std::max<std::size_t>(kEulerBase, static_cast<std::size_t>(200.0 * std::min(q, 1e3)));

  cplx sum = 0.0;
  cplx wk = 1.0;
  cplx prev_coef = 0.0;
  for (std::size_t k = 0; k < kMaxTerms; ++k) {
    const cplx coef = gen.next();
    const cplx term = coef * wk;
    sum += term;
    if (k >= kMinTerms) {
      const double cr = std::abs(prev_coef) > 0 ? std::abs(coef) / std::abs(prev_coef) : 0.0;
      const double R = absw * std::max(1.0, cr);
      if (R < kGeometricRatio || (q >= 4.0 && R < 1.0)) {
        if (std::abs(term) * R / (1.0 - R) <= tol * std::max(std::abs(sum), 1e-300)) return sum;
      } else if (k + 1 >= euler_at && absw <= 1.0 + 1e-12 && q < 4.0) {
        // Forward differences at N = k + 1 built in place.
        std::array<cplx, kEulerMaxOrder + 1> d{};
        for (auto& v : d) v = gen.next();
        cplx tail = 0.0;
        cplx qpow = 1.0;
        const cplx ratio = w / one_minus;
        double last = INFINITY;
        for (int j = 0; j <= kEulerMaxOrder; ++j) {
          const cplx contrib = qpow * d[0];
          tail += contrib;
          const double mag = std::abs(contrib);
          if (mag <= tol * std::abs(sum) * std::abs(one_minus) / std::max(std::abs(wk * w), 1e-300) ||
              mag > last)
            break;
          last = mag;
          for (int i = 0; i < kEulerMaxOrder - j; ++i) d[i] = d[i + 1] - d[i];
          qpow *= ratio;
        }
        return sum + wk * w / one_minus * tail;
      }
    }
    prev_coef = coef;
    wk *= w;
  }
  fail(ErrorCode::NonConvergence,
       fmt::format("{}: series did not converge at |w| = {:.6g}", who, absw));
}

// Coefficients (a)_k (b)_k / ((c)_k k!) of the Gauss series.
struct GaussCoefs {
  double a, b, c;
  double value = 1.0;
  int k = 0;
  cplx next() {
    const double out = value;
    value *= (a + k) * (b + k) / ((c + k) * (k + 1.0));
    ++k;
    return out;
  }
};

// Coefficients u_n (log(-z) + h_n) of the logarithmic continuation.
struct ContinuationGen {
  double a, c;
  cplx log_mz;
  double u;
  double h;
  int n = 0;
  cplx next() {
    const cplx out = u * (log_mz + h);
    h += 2.0 / (n + 1.0) - 1.0 / (a + n) + 1.0 / (c - a - n - 1.0);
    u *= (a + n) * (1.0 - c + a + n) / ((n + 1.0) * (n + 1.0));
    ++n;
    return out;
  }
};

double continuation_u0(double a, double c) { return gamma(c) / (gamma(a) * gamma(c - a)); }
double continuation_h0(double a, double c) {
  return 2.0 * digamma(1.0) - digamma(a) - digamma(c - a);
}

void check_c(const HypParams& p) {
  if (p.c <= 0.0 && p.c == std::floor(p.c))
    fail(ErrorCode::Domain, fmt::format("hypergeometric: c = {} is a non-positive integer", p.c));
}

// Series or its Euler-summed continuation on the closed unit disk minus z = 1.
cplx gauss_sum(const HypParams& p, cplx z, double tol) {
  GaussCoefs gen{p.a, p.b, p.c};
  return sum_power_series(gen, z, tol, "f_series");
}

bool on_cut(cplx z) { return z.imag() == 0.0 && z.real() > 1.0; }

// (1 - z)^s with the argument of 1 - z fixed by `side` on the cut.
cplx one_minus_pow(cplx z, double s, CutSide side) {
  if (on_cut(z)) {
    const double arg = side == CutSide::Above ? -kPi : kPi;
    return std::pow(z.real() - 1.0, s) * std::polar(1.0, arg * s);
  }
  return std::pow(1.0 - z, s);
}

}  // namespace

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::Trivial: return "trivial";
    case Regime::GaussValue: return "gauss-value";
    case Regime::Series: return "series";
    case Regime::Connection: return "connection";
    case Regime::Pfaff: return "pfaff";
    case Regime::Continuation: return "continuation";
  }
  return "unknown";
}

std::vector<ContinuationCoeffs> continuation_coeffs(double a, double c, int count) {
  std::vector<ContinuationCoeffs> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  double u = continuation_u0(a, c);
  double h = continuation_h0(a, c);
  for (int n = 0; n < count; ++n) {
    out.push_back({n, u, u * h, h});
    h += 2.0 / (n + 1.0) - 1.0 / (a + n) + 1.0 / (c - a - n - 1.0);
    u *= (a + n) * (1.0 - c + a + n) / ((n + 1.0) * (n + 1.0));
  }
  return out;
}

cplx f_series(const HypParams& p, cplx z, double tol) {
  check_c(p);
  const double r = std::abs(z);
  if (r > 1.0 + 1e-12)
    fail(ErrorCode::Domain, fmt::format("f_series: |z| = {:.17g} outside the closed unit disk", r));
  if (z == cplx(1.0, 0.0)) fail(ErrorCode::Domain, "f_series: z = 1 excluded");
  if (r >= 1.0 - 1e-12 && p.c - p.a - p.b <= 0.0)
    fail(ErrorCode::Domain, "f_series: unit circle requires c - a - b > 0");
  return gauss_sum(p, z, tol);
}

double f_at_one(const HypParams& p) {
  check_c(p);
  const double s = p.c - p.a - p.b;
  if (s <= 0.0) fail(ErrorCode::Domain, fmt::format("f_at_one: c - a - b = {} is not positive", s));
  return gamma(p.c) * gamma(s) / (gamma(p.c - p.a) * gamma(p.c - p.b));
}

cplx f_connection(const HypParams& p, cplx z, CutSide side, double tol) {
  check_c(p);
  const double s = p.c - p.a - p.b;
  if (s == std::floor(s))
    fail(ErrorCode::Domain, "f_connection: c - a - b must be non-integer");
  const cplx w = 1.0 - z;
  if (std::abs(w) > 1.0) fail(ErrorCode::Domain, "f_connection: |1 - z| must not exceed 1");
  const double g1 = gamma(p.c) * gamma(s) / (gamma(p.c - p.a) * gamma(p.c - p.b));
  const double g2 = gamma(p.c) * gamma(-s) / (gamma(p.a) * gamma(p.b));
  GaussCoefs first{p.a, p.b, 1.0 - s};
  GaussCoefs second{p.c - p.a, p.c - p.b, 1.0 + s};
  const cplx t1 = sum_power_series(first, w, tol, "f_connection");
  const cplx t2 = sum_power_series(second, w, tol, "f_connection");
  return g1 * t1 + g2 * one_minus_pow(z, s, side) * t2;
}

cplx f_pfaff(const HypParams& p, cplx z, double tol) {
  check_c(p);
  if (z.real() >= 0.5) fail(ErrorCode::Domain, "f_pfaff: requires Re z < 1/2");
  const cplx w = z / (z - 1.0);
  GaussCoefs gen{p.a, p.c - p.b, p.c};
  return std::pow(1.0 - z, -p.a) * sum_power_series(gen, w, tol, "f_pfaff");
}

cplx f_continuation_log(double a, double c, cplx z, double tol, CutSide side) {
  if (std::abs(z) <= 1.0)
    fail(ErrorCode::Domain, fmt::format("f_continuation_log: |z| = {:.6g} <= 1", std::abs(z)));
  cplx log_mz;
  cplx pow_mz;
  if (on_cut(z)) {
    const double arg = side == CutSide::Above ? -kPi : kPi;
    log_mz = cplx(std::log(z.real()), arg);
    pow_mz = std::pow(z.real(), -a) * std::polar(1.0, -a * arg);
  } else {
    log_mz = std::log(-z);
    pow_mz = std::exp(-a * log_mz);
  }
  ContinuationGen gen{a, c, log_mz, continuation_u0(a, c), continuation_h0(a, c)};
  return pow_mz * sum_power_series(gen, 1.0 / z, tol, "f_continuation_log");
}

HypResult hyp_aac(double a, double c, cplx z, CutSide side) {
  const HypParams p{a, a, c};
  const bool divergent_at_one = c - 2.0 * a <= 0.0;
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    fail(ErrorCode::Domain, "hypergeometric: non-finite argument");
  if (z == cplx(0.0, 0.0)) return {1.0, Regime::Trivial};
  const double d1 = std::abs(1.0 - z);
  if (divergent_at_one && d1 < kF76ExclusionRadius)
    fail(ErrorCode::Domain,
         fmt::format("hypergeometric: F({0},{0};{1};z) diverges at z = 1 (|1 - z| = {2:.3g})", a, c, d1));
  if (z == cplx(1.0, 0.0)) return {f_at_one(p), Regime::GaussValue};
  const double r = std::abs(z);
  if (d1 <= 0.5) return {f_connection(p, z, side), Regime::Connection};
  if (r <= 0.9) return {gauss_sum(p, z, kMachineTol), Regime::Series};
  if (r >= 1.4) return {f_continuation_log(a, c, z, kMachineTol, side), Regime::Continuation};
  if (z.real() < 0.5 && std::abs(z / (z - 1.0)) <= 0.9) return {f_pfaff(p, z), Regime::Pfaff};
  if (r <= 1.0) return {gauss_sum(p, z, kMachineTol), Regime::Series};
  return {f_continuation_log(a, c, z, kMachineTol, side), Regime::Continuation};
}

}  // namespace tricomi::specfun
