// Acceptance suite: one line per criterion, exit status 0 iff all pass.
//   acceptance [quick|full]   (default full)
#include <cstdio>
#include <cstring>
#include <map>

#include "vzhu/suite.hpp"

using namespace vzhu;

int main(int argc, char** argv) {
  SuiteOptions opt;
  opt.level = argc > 1 && std::strcmp(argv[1], "quick") == 0 ? SuiteLevel::quick : SuiteLevel::full;
  // wall-clock limits in seconds
  const std::map<int, double> limits = {{1, 1}, {2, 1}, {3, 60}, {5, 120}};

  bool all = true;
  double total = 0;
  for (const CriterionResult& r : run_criteria(opt)) {
    bool ok = r.report.passed();
    auto lim = limits.find(r.id);
    bool in_time = lim == limits.end() || r.seconds < lim->second;
    std::size_t samples = 0;
    for (const Check& c : r.report.checks) samples += c.samples;
    std::printf("criterion %2d  %-34s %s  (%zu samples, %.2f s%s)\n", r.id, r.title.c_str(),
                ok && in_time ? "PASS" : "FAIL", samples, r.seconds, in_time ? "" : ", over time limit");
    for (const Check& c : r.report.checks)
      if (c.failures > 0)
        std::printf("    %s: %zu/%zu failed, first: %s\n", c.name.c_str(), c.failures, c.samples,
                    c.first_failure.value_or("").c_str());
    all = all && ok && in_time;
    total += r.seconds;
  }
  bool in_budget = total < 600;
  std::printf("total %.1f s (budget 600 s): %s\n", total, in_budget ? "PASS" : "FAIL");
  return all && in_budget ? 0 : 1;
}
