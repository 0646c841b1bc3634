#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace rankone::tools {

enum class Compare { at_most, at_least, report };

struct Check {
  std::string id;
  int criterion = 0;
  double measured = 0.0;
  double tolerance = 0.0;
  Compare compare = Compare::at_most;
  bool pass = true;
  std::string note;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<Check> checks;
  double runtime_seconds = 0.0;
  bool pass = true;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;
  bool pass = true;
  double runtime_seconds = 0.0;
};

using ToleranceOverrides = std::map<std::string, double>;

/// Criteria 1-10 grouped by suite: special {1}, spherical {2, 3, 4},
/// transforms {6, 7, 10}, convolution {5, 8, 9}, all {1..10}.
/// Throws UsageError for an unknown suite.
std::vector<int> suite_criteria(const std::string& suite);

/// Throws UsageError when an override names no known check.
void validate_overrides(const ToleranceOverrides& overrides);

CriterionResult run_criterion(int number, const ToleranceOverrides& overrides = {});

VerifyReport run_suite(const std::string& suite, const ToleranceOverrides& overrides = {});

nlohmann::json to_json(const VerifyReport& report);

}  // namespace rankone::tools
