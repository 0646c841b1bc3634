// Runs acceptance criteria 1-10 and prints one PASS/FAIL line for each.
#include <cstdio>
#include <iostream>

#include "rankone/tools/verify.hpp"

namespace {

const char* compare_symbol(rankone::tools::Compare c) {
  switch (c) {
    case rankone::tools::Compare::at_most:
      return "<=";
    case rankone::tools::Compare::at_least:
      return ">=";
    case rankone::tools::Compare::report:
      return "(report)";
  }
  return "?";
}

}  // namespace

int main() {
  using namespace rankone::tools;
  int failures = 0;
  for (int n = 1; n <= 10; ++n) {
    const CriterionResult r = run_criterion(n);
    std::printf("%s criterion %d: %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", r.number,
                r.title.c_str(), r.runtime_seconds);
    for (const Check& c : r.checks) {
      if (c.compare == Compare::report) {
        std::printf("    %-36s %.6g %s\n", c.id.c_str(), c.measured, compare_symbol(c.compare));
      } else {
        std::printf("    %-36s %.6g %s %.3g%s\n", c.id.c_str(), c.measured,
                    compare_symbol(c.compare), c.tolerance, c.pass ? "" : "  <-- FAIL");
      }
      if (!c.note.empty()) {
        std::printf("      %s\n", c.note.c_str());
      }
    }
    std::fflush(stdout);
    failures += r.pass ? 0 : 1;
  }
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
