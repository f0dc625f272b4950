#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include <fmt/format.h>

#include "tricomi/error.hpp"
#include "tricomi/verify.hpp"

namespace tricomi::verify {

GaussRule gauss_legendre(int order) {
  if (order < 1 || order > 128)
    fail(ErrorCode::InvalidArgument, fmt::format("gauss_legendre: order {} outside [1, 128]", order));
  const int n = order;
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 1.0 / ((1.0 - x * x) * dp * dp);  // half the [-1, 1] weight
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = 0.5 * (1.0 - x);
    rule.nodes[hi] = 0.5 * (1.0 + x);
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  return rule;
}

GaussRule graded_rule(int cells, int order, double exponent) {
  if (cells < 1) fail(ErrorCode::InvalidArgument, "graded_rule: cells must be positive");
  if (!(exponent >= 1.0)) fail(ErrorCode::InvalidArgument, "graded_rule: exponent must be >= 1");
  const GaussRule base = gauss_legendre(order);
  GaussRule out;
  out.nodes.reserve(static_cast<std::size_t>(cells * order));
  out.weights.reserve(static_cast<std::size_t>(cells * order));
  const double width = 1.0 / cells;
  for (int c = 0; c < cells; ++c) {
    for (std::size_t k = 0; k < base.nodes.size(); ++k) {
      const double t = (c + base.nodes[k]) * width;
      double g;
      double dg;
      if (t <= 0.5) {
        g = 0.5 * std::pow(2.0 * t, exponent);
        dg = exponent * std::pow(2.0 * t, exponent - 1.0);
      } else {
        g = 1.0 - 0.5 * std::pow(2.0 * (1.0 - t), exponent);
        dg = exponent * std::pow(2.0 * (1.0 - t), exponent - 1.0);
      }
      out.nodes.push_back(g);
      out.weights.push_back(base.weights[k] * width * dg);
    }
  }
  return out;
}

unsigned thread_count() {
  if (const char* env = std::getenv("TRICOMI_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next.store(n);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace tricomi::verify
