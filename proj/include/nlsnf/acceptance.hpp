#pragma once

// The acceptance suite: twelve property checks against closed-form results,
// shared by the acceptance test binary and `nlsnf verify-all`.

#include <string>
#include <vector>

namespace nlsnf::acceptance {

struct Options {
  // 0 keeps the per-criterion defaults; a positive value replaces the
  // truncation of the structural checks (quick mode).
  int K = 0;
  // Skip the dynamic growth-rate measurements (criterion 10).
  bool skip_growth = false;
};

struct Result {
  int id;
  std::string name;
  bool passed;
  bool skipped;
  std::string detail;
  double seconds;
};

std::vector<Result> run_all(const Options& opts = {});
Result run_one(int id, const Options& opts = {});

inline constexpr int kCriterionCount = 12;

}  // namespace nlsnf::acceptance
