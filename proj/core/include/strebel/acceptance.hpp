#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace strebel::acceptance {

struct Options {
  std::uint64_t seed = 20260810;
  int suite_size = 500;       // random prescriptions for the existence sweep
  int monodromy_triples = 20;
  int curvature_triples = 10;
  bool check_runtime = true;  // enforce the wall-clock budgets
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Runs the eight acceptance criteria in order; never throws, failures are
// reported in the results.
std::vector<CriterionResult> run_all(const Options& options);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace strebel::acceptance
