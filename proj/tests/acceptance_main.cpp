// Runs the acceptance suite; exit status is nonzero if any criterion fails.

#include "sj/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
  sj::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--seed" && i + 1 < argc) {
      opt.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      opt.only.push_back(std::atoi(argv[i]));
    }
  }
  const auto results = sj::run_acceptance(opt, [](const sj::CriterionResult& r) {
    std::printf("%s\n", sj::format_result_line(r).c_str());
    std::fflush(stdout);
  });
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
