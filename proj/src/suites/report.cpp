#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

#include "tricomi/suites.hpp"

namespace tricomi::suites {

bool Metric::passed() const {
  if (std::isnan(value)) return false;
  return cmp == Comparison::AtMost ? value <= tolerance : value >= tolerance;
}

bool RunReport::passed() const {
  for (const auto& m : metrics)
    if (!m.passed()) return false;
  return !metrics.empty();
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["passed"] = passed();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& m : metrics) {
    nlohmann::ordered_json e;
    e["name"] = m.name;
    e["value"] = m.value;  // non-finite values serialize as null
    e["tolerance"] = m.tolerance;
    e["comparison"] = m.cmp == Comparison::AtMost ? "<=" : ">=";
    e["passed"] = m.passed();
    arr.push_back(std::move(e));
  }
  j["metrics"] = std::move(arr);
  return j.dump(2);
}

std::string format_eval_csv(double x, double y, std::complex<double> v, std::string_view region) {
  return fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{}", x, y, v.real(), v.imag(), region);
}

std::string format_eval_json(double x, double y, std::complex<double> v, std::string_view region) {
  return fmt::format(R"({{"x":{:.17g},"y":{:.17g},"re":{:.17g},"im":{:.17g},"region":"{}"}})", x, y,
                     v.real(), v.imag(), region);
}

}  // namespace tricomi::suites
