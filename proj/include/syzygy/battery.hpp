#pragma once

#include "syzygy/report.hpp"

#include <string>
#include <vector>

namespace syz {

struct BatteryConfig {
  /// Run only these checks; empty runs all.
  std::vector<std::string> only;
  /// Checks whose module fixtures get a deliberately wrong presentation entry.
  std::vector<std::string> perturb;
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  Field field{};
};

struct CheckResult {
  std::string name;
  std::string anchor;
  bool passed = false;
  std::string detail;
  double elapsed_ms = 0;
  std::uint64_t seed = kDefaultSeed;
};

struct BatteryResult {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  report::json to_json() const;
};

/// Names of the bundled checks, in run order.
std::vector<std::string> battery_check_names();
/// Throws Error for an unknown name in `only` or `perturb`.
BatteryResult run_battery(const BatteryConfig& config = {});

}  // namespace syz
