#include "ddseries/walks/census.hpp"

#include <cmath>
#include <sstream>

#include "budgeted.hpp"
#include "ddseries/error.hpp"
#include "ddseries/exact/json.hpp"

namespace ddseries::walks {

namespace {

void require_dims(int d, int n_max) {
  if (d < 1) throw PreconditionError("dimension d must be >= 1");
  if (n_max < 1) throw PreconditionError("n_max must be >= 1");
}

// Direct predicate on explicit coordinates: forbidden pairs are 0 < |i-j| <= reach.
bool admissible(const std::vector<std::vector<int>>& sites, const WalkModel& model) {
  const int n = static_cast<int>(sites.size());
  int reach = 0;
  switch (model.kind) {
    case ModelKind::Simple:
      return true;
    case ModelKind::Saw:
      reach = n;
      break;
    case ModelKind::Memory:
      reach = model.tau;
      break;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n && j - i <= reach; ++j) {
      if (sites[i] == sites[j]) return false;
    }
  }
  return true;
}

}  // namespace

WalkCensus enumerate(const WalkModel& model, int d, int n_max, const EnumerateOptions& options) {
  require_dims(d, n_max);
  detail::SearchSpec spec{model, d, n_max, false};
  const auto result = detail::budgeted_search(spec, options);
  WalkCensus census{model, d, {}, n_max};
  for (int n = 1; n <= result.attained; ++n) {
    census.counts.push_back(BigInt(static_cast<unsigned long>(result.tally.at(n, 0))) * (2 * d));
  }
  return census;
}

WalkCensus brute_force_enumerate(const WalkModel& model, int d, int n_max, std::uint64_t budget) {
  require_dims(d, n_max);
  long double total = 0;
  for (int n = 1; n <= n_max; ++n) total += std::pow(static_cast<long double>(2 * d), n);
  if (total > static_cast<long double>(budget)) {
    throw BudgetExceeded("brute force over " + std::to_string(static_cast<double>(total)) +
                         " step sequences exceeds the budget");
  }
  WalkCensus census{model, d, {}, n_max};
  for (int n = 1; n <= n_max; ++n) {
    std::vector<int> digits(static_cast<std::size_t>(n), 0);  // odometer over step sequences
    BigInt count = 0;
    for (;;) {
      std::vector<std::vector<int>> sites(1, std::vector<int>(static_cast<std::size_t>(d), 0));
      for (int step : digits) {
        auto next = sites.back();
        next[static_cast<std::size_t>(step / 2)] += (step % 2 == 0) ? 1 : -1;
        sites.push_back(std::move(next));
      }
      if (admissible(sites, model)) ++count;
      int pos = 0;
      while (pos < n && ++digits[static_cast<std::size_t>(pos)] == 2 * d) digits[static_cast<std::size_t>(pos++)] = 0;
      if (pos == n) break;
    }
    census.counts.push_back(count);
  }
  return census;
}

nlohmann::json to_json(const WalkCensus& census) {
  nlohmann::json tau;
  const auto memory = census.model.memory_length();
  if (memory) {
    tau = *memory;
  } else {
    tau = "inf";
  }
  return {{"model", census.model.name()},
          {"d", census.d},
          {"tau", tau},
          {"requested_n_max", census.requested_n_max},
          {"counts", exact::bigints_to_json(census.counts)}};
}

WalkCensus census_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("model") || !j.contains("d") || !j.contains("tau") || !j.contains("counts") ||
      !j.at("model").is_string() || !j.at("d").is_number_integer()) {
    throw PreconditionError("census JSON needs model, d, tau, counts");
  }
  std::optional<int> tau;
  if (j.at("tau").is_number_integer()) {
    tau = j.at("tau").get<int>();
  } else if (!(j.at("tau").is_string() && j.at("tau").get<std::string>() == "inf")) {
    throw PreconditionError("census tau must be an integer or \"inf\"");
  }
  WalkCensus census;
  census.model = parse_model(j.at("model").get<std::string>(), tau);
  if (census.model.kind == ModelKind::Saw && tau) throw PreconditionError("saw census must have tau \"inf\"");
  census.d = j.at("d").get<int>();
  census.counts = exact::bigints_from_json(j.at("counts"));
  census.requested_n_max = j.value("requested_n_max", census.max_length());
  return census;
}

std::string to_csv(const WalkCensus& census) {
  std::ostringstream out;
  out << "n,count\n";
  for (int n = 1; n <= census.max_length(); ++n) out << n << ',' << census.count(n).get_str() << '\n';
  return out.str();
}

}  // namespace ddseries::walks
