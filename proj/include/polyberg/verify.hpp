#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyberg/generators.hpp"

namespace polyberg {

struct VerifyConfig {
  int n = 3;
  double alpha = 0.0;
  int xi_max = 16;
  std::uint64_t seed = 0;
  Tolerances tol;
};

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

/// Runs the invariant checks of every module at the configured sizes.
/// Sup-bound checks are skipped for alpha <= 0.
std::vector<CheckResult> run_invariant_suite(const VerifyConfig& cfg);

}  // namespace polyberg
