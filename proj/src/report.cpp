#include "pmg/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

namespace pmg {

bool all_passed(const Report& report) {
  return std::all_of(report.begin(), report.end(), [](const CheckResult& r) { return r.passed(); });
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // also folds -0
  std::array<char, 64> buf{};
  // to_chars is locale-independent.
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

std::string format_report(const Report& report) {
  std::string out;
  for (const auto& r : report) {
    out += r.name;
    out += r.passed() ? " PASS " : " FAIL ";
    out += format_double(r.max_residual);
    out += ' ';
    out += format_double(r.threshold);
    out += '\n';
  }
  return out;
}

}  // namespace pmg
