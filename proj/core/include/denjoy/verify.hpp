#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "denjoy/config.hpp"

namespace denjoy {

inline constexpr const char* kVerifySchema = "denjoy.verify/1";

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double bound = 0.0;
  bool pass = false;
  double duration_ms = 0.0;
};

struct VerifyOptions {
  bool cantor = true;
  bool denjoy = true;
  bool planar = true;
  double eps = 1e-30;
  int samples = 1000;
  std::uint64_t seed = 1;
  std::int64_t rotation_steps = 10000;
  /// Error-bound cap for orbit-based checks; exceeding it aborts the run.
  std::optional<double> budget;
  /// Durations are excluded by default so reports are byte-stable.
  bool timings = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool pass = false;
  std::string config_hash;
  VerifyOptions options;
  /// Reported quantities with no acceptance threshold; never affect pass.
  std::map<std::string, double> diagnostics;

  const CheckResult* find(const std::string& name) const;
  /// Sorted-key JSON with a trailing newline.
  std::string to_json() const;
};

/// Runs the selected suites. Throws ErrorBudgetExceeded when an orbit
/// exceeds options.budget, DepthExceeded when eps is finer than the model.
VerifyReport run_verify(const BuildConfig& config, const VerifyOptions& options);

}  // namespace denjoy
