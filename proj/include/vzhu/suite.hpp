#ifndef VZHU_SUITE_HPP
#define VZHU_SUITE_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "vzhu/algebra.hpp"
#include "vzhu/report.hpp"

namespace vzhu {

enum class SuiteLevel { quick, full };

struct SuiteOptions {
  SuiteLevel level = SuiteLevel::full;
  std::uint64_t seed = 0;
  EngineOptions engine;
  // Criteria to run (1..13); empty means all.
  std::set<int> only;
  bool timing = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  VerificationReport report;
  double seconds = 0;
};

// Criteria 1..13 of the acceptance suite. Quick halves weights and samples.
// Criterion 13 reruns 1..12 twice at the same level and runs 3 and 10 on a
// mutated engine.
std::vector<CriterionResult> run_criteria(const SuiteOptions& opt);

// One report whose checks are named "cNN.<part>.<check>".
VerificationReport suite_report(const std::vector<CriterionResult>& results, const SuiteOptions& opt);

std::string criterion_title(int id);

}  // namespace vzhu

#endif  // VZHU_SUITE_HPP
