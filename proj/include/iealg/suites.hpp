#pragma once

// The twelve acceptance checks, grouped into named suites for the CLI.

#include <string>
#include <string_view>
#include <vector>

namespace iealg {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  long long elapsed_ms = 0;
};

struct SuiteOptions {
  std::size_t antisymmetry_max_size = 5;
  std::size_t jacobi_max_size = 4;
  unsigned threads = 1;
};

constexpr int criterion_count = 12;

/// Criteria run by a suite: "jacobi", "paper-examples", "lemmas", "kernels"
/// or "all". Throws std::invalid_argument for other names.
std::vector<int> suite_criteria(std::string_view name);

/// Runs one criterion (1..12). Exceptions from the engine become failures.
CheckResult run_criterion(int id, const SuiteOptions& options = {});

/// Number of rooted trees on n vertices from the counting recurrence.
std::size_t rooted_tree_count(std::size_t n);

}  // namespace iealg
