#include <cmath>
#include <random>

#include "ddseries/cli/cli.hpp"
#include "ddseries/connective/mu.hpp"
#include "ddseries/connective/theorem1.hpp"
#include "ddseries/connective/transfer.hpp"
#include "ddseries/reversion/alpha.hpp"
#include "ddseries/reversion/bounds.hpp"
#include "ddseries/reversion/ctable.hpp"
#include "ddseries/resummation/source.hpp"
#include "ddseries/store/store.hpp"
#include "ddseries/walks/canonical.hpp"
#include "ddseries/walks/census.hpp"
#include "ddseries/walks/simple.hpp"

namespace ddseries::cli {

namespace {

using nlohmann::json;
using reversion::CTable;
using walks::WalkModel;

constexpr int kRandomTables = 100;

CTable catalan_table() {
  CTable t(1);
  t.set(2, 1, 1);
  return t;
}

walks::DimTable class_table(const WalkModel& model, int n_max, const SuiteOptions& options) {
  walks::EnumerateOptions eo;
  eo.workers = options.workers;
  if (options.cache_dir.empty()) return walks::canonical_classes(model, n_max, 0, eo);
  const store::Cache cache(options.cache_dir, tool_version());
  const json key = {{"kind", "dim_table"}, {"model", model.label()}, {"n_max", n_max}};
  const auto value = cache.get_or_compute(
      key, [&] { return walks::to_json(walks::canonical_classes(model, n_max, 0, eo)); },
      [](const json& j) { (void)walks::dim_table_from_json(j); });
  return walks::dim_table_from_json(value);
}

// Direct DFS while it is cheap, otherwise canonical classes in ambient
// dimension d evaluated at d (an orbit-weighted enumeration).
walks::WalkCensus exact_census(const WalkModel& model, int d, int n_max, const walks::EnumerateOptions& eo) {
  if (std::pow(2.0 * d - 1, n_max - 1) <= 1e8) return walks::enumerate(model, d, n_max, eo);
  return walks::census_from_classes(walks::canonical_classes(model, n_max, d, eo), d);
}

}  // namespace

SuiteResult run_lemma_suite(const SuiteOptions& options) {
  SuiteResult out;
  const auto phi = reversion::check_phi_power_bound(14, 14);
  const auto psi = reversion::check_psi_power_bound(14, 14);
  out.report["phi_power_bound"] = reversion::to_json(phi);
  out.report["psi_power_bound"] = reversion::to_json(psi);
  out.passed = phi.passed && psi.passed;

  // Route equivalence and truncation locality on seeded random tables.
  std::mt19937_64 rng(options.seed);
  int agree = 0;
  int local = 0;
  for (int i = 0; i < kRandomTables; ++i) {
    const int max_b = 1 + static_cast<int>(rng() % 5);
    const auto table = reversion::random_table(rng, max_b);
    const int n_max = 10;
    const auto lemma = reversion::alpha_via_lemma(table, n_max);
    const bool same = lemma == reversion::alpha_via_iteration(table, n_max) &&
                      lemma == reversion::alpha_via_lagrange(table, n_max);
    agree += same ? 1 : 0;
    // alpha_n only sees b <= n - 1
    bool locality = true;
    for (int n = 1; n <= n_max; ++n) {
      const auto cut = reversion::alpha_via_lemma(table.restricted(n - 1), n);
      locality = locality && cut(n) == lemma(n);
    }
    local += locality ? 1 : 0;
  }
  out.report["route_equivalence"] = {{"tables", kRandomTables}, {"agreeing", agree}, {"seed", options.seed}};
  out.report["truncation_locality"] = {{"tables", kRandomTables}, {"holding", local}};
  out.passed = out.passed && agree == kRandomTables && local == kRandomTables;

  const auto catalan = reversion::alpha_via_lemma(catalan_table(), 6);
  json cat = json::array();
  for (const auto& v : catalan.values) cat.push_back(exact::to_string(v));
  out.report["catalan_alpha"] = cat;
  const auto bound = reversion::check_alpha_factorial_bound(catalan_table(), 1, 12);
  out.report["alpha_factorial_bound_catalan"] = reversion::to_json(bound);
  out.passed = out.passed && bound.passed;
  out.report["passed"] = out.passed;
  return out;
}

SuiteResult run_walk_suite(const SuiteOptions& options) {
  SuiteResult out;
  walks::EnumerateOptions eo;
  eo.workers = options.workers;
  const std::vector<WalkModel> models = {WalkModel::saw(), WalkModel::simple(), WalkModel::memory(2),
                                         WalkModel::memory(4)};
  json brute = json::array();
  for (const auto& model : models) {
    for (int d = 1; d <= 2; ++d) {
      const bool same = walks::enumerate(model, d, 8, eo) == walks::brute_force_enumerate(model, d, 8);
      brute.push_back({{"model", model.label()}, {"d", d}, {"n_max", 8}, {"equal", same}});
      out.passed = out.passed && same;
    }
  }
  out.report["enumerate_vs_brute_force"] = brute;

  json memory2 = json::array();
  for (int d = 1; d <= 4; ++d) {
    const auto c = exact_census(WalkModel::memory(2), d, 12, eo);
    bool ok = true;
    for (int n = 1; n <= 12; ++n) {
      ok = ok && c.count(n) == exact::BigInt(2 * d) * exact::pow(exact::BigInt(2 * d - 1), static_cast<unsigned long>(n - 1));
    }
    const auto transfer = connective::mu_tau_transfer(d, 2);
    const bool mu_ok = std::abs(transfer.eigenvalue - (2 * d - 1)) <= 1e-12 * (2 * d - 1);
    memory2.push_back({{"d", d}, {"closed_form", ok}, {"mu_2", transfer.eigenvalue}, {"mu_2_exact", mu_ok}});
    out.passed = out.passed && ok && mu_ok;
  }
  out.report["memory_2"] = memory2;

  json poly = json::array();
  for (const auto& model : {WalkModel::saw(), WalkModel::memory(4)}) {
    const auto table = class_table(model, 10, options);
    for (int d = 1; d <= 3; ++d) {
      const bool same = walks::census_from_classes(table, d) == walks::enumerate(model, d, 10, eo);
      poly.push_back({{"model", model.label()}, {"d", d}, {"n_max", 10}, {"equal", same}});
      out.passed = out.passed && same;
    }
  }
  out.report["dimensional_polynomials"] = poly;

  json simple = json::array();
  for (int d = 1; d <= 4; ++d) {
    const auto report = walks::check_simple_walk_bounds(walks::simple_walk_counts(d, 6));
    simple.push_back(walks::to_json(report));
    out.passed = out.passed && report.passed;
  }
  out.report["simple_walk_bounds"] = simple;
  out.report["passed"] = out.passed;
  return out;
}

SuiteResult run_theorem1_suite(const SuiteOptions& options) {
  SuiteResult out;
  // Catalan toy: beta = (1 - sqrt(1 - 4s)) / 2, alpha_n = C_{n-1}, s = 1/8.
  {
    const auto src = resummation::catalan_source(10);
    reversion::AlphaSeries alphas;
    for (const auto& e : src.entries) alphas.values.push_back(e.value);
    const double s = 1.0 / 8;
    const double beta = (1 - std::sqrt(1 - 4 * s)) / 2;
    const auto r = connective::theorem1_check(alphas, beta, 4, 10, "closed form");
    out.report["catalan_toy"] = connective::to_json(r);
    out.passed = out.passed && r.passed();
  }
  const auto published = resummation::saw_published_source();
  reversion::AlphaSeries alphas;
  for (const auto& e : published.entries) alphas.values.push_back(e.value);

  const auto table = class_table(WalkModel::saw(), options.theorem1_n_max, options);
  json saw = json::array();
  for (int d = 4; d <= 10; ++d) {
    const auto mu = connective::mu_estimates(walks::census_from_classes(table, d));
    auto beta = connective::beta_from_mu(mu);
    std::string source = "enumeration (n <= " + std::to_string(table.n_max) + ")";
    const auto key = std::to_string(d);
    if (options.beta_overrides.is_object() && options.beta_overrides.contains(key)) {
      beta.value = options.beta_overrides.at(key).get<double>();
      beta.uncertainty = 0;
      source = "file";
    }
    const auto r = connective::theorem1_check(alphas, beta.value, d, 6, source);
    const auto mu4 = connective::mu_tau_transfer(d, 4);
    const auto ordering =
        connective::beta_ordering_check(d, 1.0 / (2 * d - 1), 1 / mu4.eigenvalue, beta.value, beta.uncertainty);
    saw.push_back({{"theorem1", connective::to_json(r)},
                   {"mu", connective::to_json(mu)},
                   {"beta_hat_uncertainty", beta.uncertainty},
                   {"ordering", connective::to_json(ordering)}});
    out.passed = out.passed && r.passed() && ordering.passed;
  }
  out.report["saw"] = saw;
  out.report["passed"] = out.passed;
  return out;
}

}  // namespace ddseries::cli
