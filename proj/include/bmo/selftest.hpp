#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bmo/report.hpp"

namespace bmo::selftest {

struct CheckResult {
  std::string id;  // "1".."9" for acceptance criteria, "P1".. for properties
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  report::Json data;
};

/// Acceptance criteria run in-process.
std::vector<std::string> criterion_ids();
/// Extra invariant/property checks.
std::vector<std::string> property_ids();

/// Throws std::out_of_range for an unknown id.
CheckResult run_check(const std::string& id, std::uint64_t seed);

/// Every criterion then every property.
std::vector<CheckResult> run_all(std::uint64_t seed);

// Pinned limits.
inline constexpr double kHilbertSweepSeconds = 60.0;
inline constexpr double kWitnessPipelineSeconds = 10.0;
inline constexpr double kSelftestSeconds = 300.0;

}  // namespace bmo::selftest
