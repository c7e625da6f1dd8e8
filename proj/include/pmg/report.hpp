#pragma once

#include <string>
#include <vector>

namespace pmg {

/// One named check: passes when max_residual < threshold.
struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double threshold = 0.0;

  bool passed() const { return max_residual < threshold; }
};

using Report = std::vector<CheckResult>;

bool all_passed(const Report& report);

/// "name status max_residual threshold", one line per check, '\n'-terminated.
std::string format_report(const Report& report);

/// Locale-independent shortest-roundtrip-safe formatting with 17 significant digits.
std::string format_double(double value);

}  // namespace pmg
