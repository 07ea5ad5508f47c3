#pragma once

// The acceptance suite: fourteen numbered checks, each reporting the worst
// measured defect against its threshold.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sj {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst defect observed (or 0/1 for counts)
  double threshold = 0.0;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 42;
  int workers = 0;
  std::vector<int> only;  // empty: all criteria
};

using CriterionCallback = std::function<void(const CriterionResult&)>;

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, const CriterionCallback& on_result = {});
int acceptance_count();

// Items deliberately outside the suite, reported by verify-all.
const std::vector<std::string>& skipped_by_design();

std::string format_result_line(const CriterionResult& r);

}  // namespace sj
