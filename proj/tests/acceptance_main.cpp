// Acceptance suite runner: one line per criterion, nonzero exit on failure.

#include <cstdio>

#include "cospans/selftest.hpp"

int main() {
  std::vector<cospans::CriterionResult> results =
      cospans::run_acceptance({/*max_size=*/3, /*seed=*/1});
  int failures = 0;
  for (const auto& r : results) {
    std::printf("%s  %s (%s)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 1;
}
