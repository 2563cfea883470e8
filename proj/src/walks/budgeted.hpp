#pragma once

#include "engine.hpp"

namespace ddseries::walks::detail {

struct BudgetedResult {
  Tally tally;
  int attained = 0;  // every length <= attained is complete
};

// Runs a short pilot search, extrapolates the per-level growth to pick the
// longest length that fits options.node_budget, then searches to that
// length. If the full search still overruns, the pilot result is returned.
BudgetedResult budgeted_search(const SearchSpec& spec, const EnumerateOptions& options);

}  // namespace ddseries::walks::detail
