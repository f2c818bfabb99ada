#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gp {

struct SuiteParams {
  uint64_t seed = 42;
  uint32_t samples = 0;  // 0 = suite default
  uint32_t depth = 0;    // 0 = suite default
  uint32_t max_len = 0;  // 0 = suite default
};

struct SuiteResult {
  std::string suite;
  bool passed = true;
  uint64_t checks = 0;
  std::vector<std::string> violations;  // counterexamples, capped
  std::string summary;

  void fail(std::string message);
};

/// Registered suite names, acceptance criteria first.
const std::vector<std::pair<std::string, std::string>>& suite_catalog();

bool is_suite(const std::string& name);

/// Runs one suite deterministically for the given parameters.
SuiteResult run_suite(const std::string& name, const SuiteParams& params);

/// The eight acceptance criteria with their pinned parameters.
std::vector<SuiteResult> run_acceptance(uint64_t seed);

}  // namespace gp
