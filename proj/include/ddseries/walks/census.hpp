#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "ddseries/exact/rational.hpp"
#include "ddseries/walks/model.hpp"

namespace ddseries::walks {

using exact::BigInt;

// Counts of n-step walks started at the origin, n = 1 .. max_length().
struct WalkCensus {
  WalkModel model;
  int d = 0;
  std::vector<BigInt> counts;  // counts[n - 1]
  int requested_n_max = 0;

  int max_length() const { return static_cast<int>(counts.size()); }
  bool partial() const { return max_length() < requested_n_max; }
  const BigInt& count(int n) const { return counts.at(static_cast<std::size_t>(n - 1)); }

  friend bool operator==(const WalkCensus&, const WalkCensus&) = default;
};

struct EnumerateOptions {
  // Upper limit on DFS nodes; past it the census is cut to the longest length
  // that fits and reported as partial.
  std::uint64_t node_budget = 20'000'000'000ULL;
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  // Prefix depth at which the search tree is split into independent jobs.
  int split_depth = 4;
};

// Depth-first enumeration; the first step is pinned to +e_1 and the tally
// scaled by 2d.
WalkCensus enumerate(const WalkModel& model, int d, int n_max, const EnumerateOptions& options = {});

// Test oracle: every step sequence, filtered by a direct pairwise check.
// Throws BudgetExceeded when sum_n (2d)^n exceeds the budget.
WalkCensus brute_force_enumerate(const WalkModel& model, int d, int n_max, std::uint64_t budget = 50'000'000ULL);

// {"model": ..., "d": int, "tau": int or "inf", "counts": ["...", ...]}
nlohmann::json to_json(const WalkCensus& census);
WalkCensus census_from_json(const nlohmann::json& j);
// "n,count" rows with a header line.
std::string to_csv(const WalkCensus& census);

}  // namespace ddseries::walks
