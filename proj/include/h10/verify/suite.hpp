#pragma once

#include "h10/core/json.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace h10 {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double elapsed = 0;  // seconds
  std::optional<std::string> counterexample;  // present iff !pass
  std::string detail;
};

struct SuiteReport {
  std::vector<CriterionResult> results;
  bool all_pass() const;
};

struct Criterion {
  int id;
  std::string name;
  /// Returns a counterexample description, or nullopt on success; `detail`
  /// receives a short summary either way.
  std::function<std::optional<std::string>(std::string& detail)> run;
};

const std::vector<Criterion>& acceptance_criteria();

/// Runs the listed criteria (all when empty). An exception inside a
/// criterion counts as a failure with the message as counterexample.
SuiteReport run_suite(const std::vector<int>& only = {});

/// Timings are omitted unless requested so that output is reproducible.
json::Json encode(const SuiteReport& r, bool with_timings = false);

/// Sample counts at which the U0 coverage mod p first reaches 1.
inline constexpr long kFullCoverageCount3 = 7;
inline constexpr long kFullCoverageCount5 = 9;

} // namespace h10
