#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <fmt/format.h>

#include "tricomi/error.hpp"
#include "tricomi/suites.hpp"

namespace tricomi::suites {

namespace {

void validate(const GridSpec& g) {
  const bool finite = std::isfinite(g.xmin) && std::isfinite(g.xmax) && std::isfinite(g.ymin) && std::isfinite(g.ymax);
  if (!finite || !(g.xmin < g.xmax) || !(g.ymin < g.ymax))
    fail(ErrorCode::InvalidArgument, "grid: bounds must be finite with min < max");
  if (g.nx < 2 || g.ny < 2) fail(ErrorCode::InvalidArgument, "grid: nx and ny must be at least 2");
  if (static_cast<long long>(g.nx) * g.ny > 10'000'000LL)
    fail(ErrorCode::InvalidArgument, "grid: more than 1e7 samples");
}

std::string row(SolutionKind kind, const Source& s, double x, double y) {
  try {
    const auto ev = fundsol::eval_solution(kind, {x, y}, s);
    return format_eval_csv(x, y, ev.value, geometry::region_name(ev.region.tag));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularLocus) throw;
    const Source src = (kind == SolutionKind::FPlus || kind == SolutionKind::FMinus) ? geometry::source_from_b(0.0) : s;
    return fmt::format("{:.17g},{:.17g},,,{}", x, y, geometry::region_name(geometry::classify({x, y}, src).tag));
  }
}

}  // namespace

long write_grid_csv(SolutionKind kind, const Source& s, const GridSpec& g, const std::string& path) {
  validate(g);
  if (path.empty()) fail(ErrorCode::InvalidArgument, "grid: output path is empty");
  const double dx = (g.xmax - g.xmin) / g.nx;
  const double dy = (g.ymax - g.ymin) / g.ny;

  std::vector<std::string> lines(static_cast<std::size_t>(g.ny));
  verify::parallel_for(lines.size(), [&](std::size_t j) {
    const double y = g.ymin + (static_cast<double>(j) + 0.5) * dy;
    std::string out;
    for (int i = 0; i < g.nx; ++i) {
      out += row(kind, s, g.xmin + (i + 0.5) * dx, y);
      out += '\n';
    }
    lines[j] = std::move(out);
  });

  const std::string tmp = path + ".partial";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) fail(ErrorCode::Io, fmt::format("grid: cannot open {}", tmp));
    f << "x,y,re,im,region\n";
    for (const auto& l : lines) f << l;
    f.flush();
    if (!f) {
      f.close();
      std::remove(tmp.c_str());
      fail(ErrorCode::Io, fmt::format("grid: write to {} failed", tmp));
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    fail(ErrorCode::Io, fmt::format("grid: cannot rename to {}: {}", path, ec.message()));
  }
  return static_cast<long>(g.nx) * g.ny;
}

}  // namespace tricomi::suites
