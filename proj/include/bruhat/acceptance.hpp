#pragma once

#include <functional>
#include <string>
#include <vector>

namespace bruhat {

enum class CheckLevel { fast, full };

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // first failure, or a short summary
  double seconds = 0;
};

inline constexpr int criterion_count = 11;

/// Runs one acceptance criterion; exceptions count as failures.
CriterionResult run_criterion(int id, CheckLevel level);
/// Runs the listed criteria (all when empty), reporting each as it finishes.
std::vector<CriterionResult> run_acceptance(CheckLevel level, const std::vector<int>& only = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& r);

}  // namespace bruhat
