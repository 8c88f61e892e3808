#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homalg/hom_algebra.hpp"

namespace homalg {

/// One entry of the reproduction report. Serialized entries never include
/// timing, so reports are byte-identical across runs with equal seeds.
struct ScenarioResult {
  std::string id;
  std::string provenance;  // "reference" | "derived" | "conditional"
  std::string verdict;     // "pass" | "fail" | "conditional-skip"
  std::string detail;
  long millis = 0;
  long budget_ms = 0;      // 0 = no budget
};

struct ReproOptions {
  std::string filter;           // substring match on scenario id
  std::uint64_t seed = 20250808;
  int trials = 50;
};

/// Runs the built-in verification scenarios, sorted by scenario id.
std::vector<ScenarioResult> run_repro(const ReproOptions& opts = {});

/// Line-delimited records with stable field order.
std::string repro_report_lines(const std::vector<ScenarioResult>& results);

}  // namespace homalg
