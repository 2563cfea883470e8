#include "budgeted.hpp"

#include <algorithm>

#include "ddseries/error.hpp"

namespace ddseries::walks::detail {

namespace {

constexpr int kPilotDepth = 6;

long double level_total(const Tally& tally, int n) {
  long double t = 0;
  for (int dim = 0; dim <= tally.dims; ++dim) t += static_cast<long double>(tally.at(n, dim));
  return t;
}

}  // namespace

BudgetedResult budgeted_search(const SearchSpec& spec, const EnumerateOptions& options) {
  SearchSpec pilot_spec = spec;
  pilot_spec.n_max = std::min(spec.n_max, kPilotDepth);
  auto pilot = run_search(pilot_spec, options.node_budget, options.workers, options.split_depth);
  if (pilot.aborted) {
    throw BudgetExceeded("node budget " + std::to_string(options.node_budget) + " exhausted within the first " +
                         std::to_string(pilot_spec.n_max) + " steps");
  }
  // Re-shape the pilot tally to the full length range.
  Tally widened(spec.n_max, pilot.tally.dims);
  for (int n = 0; n <= pilot_spec.n_max; ++n)
    for (int dim = 0; dim <= pilot.tally.dims; ++dim) widened.at(n, dim) = pilot.tally.at(n, dim);
  BudgetedResult fallback{widened, pilot_spec.n_max};
  if (pilot_spec.n_max == spec.n_max) return fallback;

  const int last = pilot_spec.n_max;
  const long double top = level_total(pilot.tally, last);
  const long double prev = level_total(pilot.tally, last - 1);
  const long double ratio = prev > 0 ? std::max<long double>(top / prev, 1.0L) : 1.0L;
  long double predicted = static_cast<long double>(pilot.tally.total());
  long double level = top;
  int target = last;
  while (target < spec.n_max) {
    level *= ratio;
    if (predicted + level > static_cast<long double>(options.node_budget)) break;
    predicted += level;
    ++target;
  }
  if (target == last) return fallback;

  SearchSpec full_spec = spec;
  full_spec.n_max = target;
  auto full = run_search(full_spec, options.node_budget, options.workers, options.split_depth);
  if (full.aborted) return fallback;
  Tally out(spec.n_max, full.tally.dims);
  for (int n = 0; n <= target; ++n)
    for (int dim = 0; dim <= full.tally.dims; ++dim) out.at(n, dim) = full.tally.at(n, dim);
  return {out, target};
}

}  // namespace ddseries::walks::detail
