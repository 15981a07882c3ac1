#pragma once

// Runnable verification suites. Each check produces one CheckResult; a suite
// passes when every gating check in it passes.

#include <cstdint>
#include <string>
#include <vector>

namespace gtstate {

struct CheckResult {
  int id = 0;
  std::string suite;
  bool passed = false;
  bool gating = true;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  unsigned threads = 1;
  std::uint64_t seed = 20240601;
};

/// Suite names in run order; "all" runs every one of them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts = {});

bool gated_pass(const std::vector<CheckResult>& results);

/// "PASS [ 3] covariance (12.1 s): ..." style line.
std::string format_result(const CheckResult& r);

}  // namespace gtstate
