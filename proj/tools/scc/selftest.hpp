#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scc::cli {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few failing cases
};

/// Runs the property suites of every module. Deterministic for a fixed seed.
std::vector<SuiteResult> run_selftest(std::uint64_t seed, int iterations);

}  // namespace scc::cli
