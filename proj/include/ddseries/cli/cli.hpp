#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace ddseries::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kUsage = 2, kBudget = 3 };

std::string tool_version();

// Entry point shared by the executable and the tests. args[0] is the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SuiteResult {
  bool passed = true;
  nlohmann::json report;
};

struct SuiteOptions {
  unsigned long long seed = 20240601;
  unsigned workers = 0;
  int theorem1_n_max = 11;            // SAW class table length behind beta_hat
  nlohmann::json beta_overrides;      // {"d": beta} from --beta-file, or null
  std::string cache_dir;              // empty: no caching
};

SuiteResult run_lemma_suite(const SuiteOptions& options);
SuiteResult run_walk_suite(const SuiteOptions& options);
SuiteResult run_theorem1_suite(const SuiteOptions& options);

}  // namespace ddseries::cli
