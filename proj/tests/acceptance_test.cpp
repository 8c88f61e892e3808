// Acceptance suite: runs every built-in verification scenario, prints one
// pass/fail line per criterion, and enforces the stated time budgets.
#include <cstdio>

#include "homalg/repro.hpp"

int main() {
  homalg::ReproOptions opts;
  const auto results = homalg::run_repro(opts);
  int failures = 0;
  for (const auto& r : results) {
    bool ok = r.verdict == "pass" || r.verdict == "conditional-skip";
    std::string timing;
    if (r.budget_ms > 0) {
      timing = " [" + std::to_string(r.millis) + " ms / budget " +
               std::to_string(r.budget_ms) + " ms]";
      if (r.millis > r.budget_ms) ok = false;
    }
    std::printf("[%s] %-32s %s%s\n", ok ? "PASS" : "FAIL", r.id.c_str(),
                (r.verdict + (r.detail.empty() ? "" : ": " + r.detail)).c_str(),
                timing.c_str());
    if (!ok) ++failures;
  }
  std::printf("%d/%zu criteria passing\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 1;
}
