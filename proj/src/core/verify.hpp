#pragma once

#include "io.hpp"

namespace mpkit {

// The library's self-check battery. Each criterion exercises one pillar of
// the workbench against an independent reference path, with fixed trial
// counts and wall-clock budgets. A criterion passes only if every trial
// agrees and the budget holds.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail; // one line: trial counts, mismatches, elapsed
  double seconds = 0.0;
};

// Runs criterion `only` (1..9), or all of them when `only` is 0. The seed
// feeds every randomized corpus; a fixed seed gives identical output.
std::vector<CriterionResult> run_acceptance(uint64_t seed, int only = 0);

Report acceptance_report(const std::vector<CriterionResult>& results);

} // namespace mpkit
