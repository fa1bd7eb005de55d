#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecurv/algebra_kernel.hpp"

namespace liecurv::cli {

enum class Bound { kAtMost, kAtLeast };

struct SuiteResult {
  std::string name;
  /// Worst observed statistic over the suite. For kAtLeast suites (negative
  /// controls) it is the smallest value that had to stay above the bound.
  double max_error = 0.0;
  double tolerance = 0.0;
  Bound bound = Bound::kAtMost;
  int samples = 0;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Empty: the fixed certificate over gl(2..4,R) and gl(2,C).
  std::string structure;
  Seed seed{42};
  int trials = 500;
  /// Replaces every suite tolerance when set.
  std::optional<double> tol;
};

struct VerifyReport {
  std::string structure;
  Seed seed;
  int trials = 0;
  std::vector<SuiteResult> suites;

  bool all_passed() const;
  const SuiteResult* find(const std::string& name) const;
};

/// Runs every suite; never throws for a failing suite, only for bad options
/// (ParseError on the structure selector, Error on trials < 1).
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace liecurv::cli
