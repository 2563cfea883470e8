#include "ddseries/cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "ddseries/error.hpp"
#include "ddseries/exact/json.hpp"
#include "ddseries/reversion/alpha.hpp"
#include "ddseries/reversion/ctable.hpp"
#include "ddseries/resummation/borel.hpp"
#include "ddseries/resummation/source.hpp"
#include "ddseries/spherical/kc.hpp"
#include "ddseries/spherical/series.hpp"
#include "ddseries/store/store.hpp"
#include "ddseries/walks/canonical.hpp"
#include "ddseries/walks/census.hpp"

#ifndef DDSERIES_VERSION
#define DDSERIES_VERSION "unknown"
#endif

namespace ddseries::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::string out_path;
  std::string cache_dir;
  std::string manifest_path;
  unsigned long long seed = 20240601;
  unsigned jobs = 0;
};

// What a subcommand hands back: the result body, any input files it read,
// the parameters that determine it, and an exit code.
struct Outcome {
  json result;
  json parameters = json::object();
  std::vector<std::string> inputs;
  int code = kOk;
  std::string text;  // non-JSON rendering (CSV) if requested
};

std::string cache_dir(const Globals& g) {
  if (const char* env = std::getenv("DDSERIES_CACHE"); env && *env) return env;
  return g.cache_dir;
}

json strings(const std::vector<exact::Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(exact::to_string(q));
  return out;
}

// enumerate ---------------------------------------------------------------

struct EnumerateArgs {
  std::string model = "saw";
  std::optional<int> tau;
  int d = 0;
  int n = 0;
  std::string format = "json";
  std::uint64_t budget = walks::EnumerateOptions{}.node_budget;
};

Outcome do_enumerate(const EnumerateArgs& a, const Globals& g, std::ostream& err) {
  const auto model = walks::parse_model(a.model, a.tau);
  walks::EnumerateOptions eo;
  eo.workers = g.jobs;
  eo.node_budget = a.budget;
  Outcome o;
  o.parameters = {{"model", model.label()}, {"d", a.d}, {"n", a.n}, {"format", a.format}, {"budget", a.budget}};
  const json key = {{"kind", "census"}, {"model", model.label()}, {"d", a.d}, {"n", a.n}};
  std::optional<walks::WalkCensus> census;
  const auto dir = cache_dir(g);
  std::optional<store::Cache> cache;
  if (!dir.empty()) {
    cache.emplace(dir, tool_version(), &err);
    if (auto hit = cache->lookup(key, [](const json& j) { (void)walks::census_from_json(j); })) {
      census = walks::census_from_json(*hit);
      census->requested_n_max = a.n;
    }
  }
  if (!census) {
    census = walks::enumerate(model, a.d, a.n, eo);
    if (cache && !census->partial()) cache->store(key, walks::to_json(*census));
  }
  o.result = walks::to_json(*census);
  o.result["max_length"] = census->max_length();
  o.result["partial"] = census->partial();
  if (a.format == "csv") o.text = walks::to_csv(*census);
  if (census->partial()) {
    err << "node budget reached: counts complete through n = " << census->max_length() << "\n";
    o.code = kBudget;
  }
  return o;
}

// dimpoly -----------------------------------------------------------------

struct DimpolyArgs {
  std::string model = "saw";
  std::optional<int> tau;
  int n_max = 0;
  int ambient = 0;
};

Outcome do_dimpoly(const DimpolyArgs& a, const Globals& g) {
  const auto model = walks::parse_model(a.model, a.tau);
  walks::EnumerateOptions eo;
  eo.workers = g.jobs;
  Outcome o;
  o.parameters = {{"model", model.label()}, {"n_max", a.n_max}, {"ambient", a.ambient}};
  walks::DimTable table;
  const auto dir = cache_dir(g);
  if (!dir.empty() && a.ambient == 0) {
    const store::Cache cache(dir, tool_version());
    const json key = {{"kind", "dim_table"}, {"model", model.label()}, {"n_max", a.n_max}};
    table = walks::dim_table_from_json(cache.get_or_compute(
        key, [&] { return walks::to_json(walks::canonical_classes(model, a.n_max, 0, eo)); },
        [](const json& j) { (void)walks::dim_table_from_json(j); }));
  } else {
    table = walks::canonical_classes(model, a.n_max, a.ambient, eo);
  }
  json polys = json::array();
  for (int n = 1; n <= table.n_max; ++n) {
    const auto p = walks::dimensional_polynomial(table, n);
    json falling = json::object();
    for (const auto& [dim, c] : p.terms()) falling[std::to_string(dim)] = exact::to_string(c);
    json monomials = json::array();  // coefficient of X^k, X = 2d
    for (const auto& [power, c] : p.expand()) monomials.push_back({{"x_power", -power}, {"value", exact::to_string(c)}});
    polys.push_back({{"n", n}, {"falling_factorial", falling}, {"monomials", monomials}});
  }
  o.result = {{"table", walks::to_json(table)}, {"polynomials", polys}, {"partial", table.n_max < a.n_max}};
  if (table.n_max < a.n_max) o.code = kBudget;
  return o;
}

// alpha -------------------------------------------------------------------

struct AlphaArgs {
  std::string table;
  int n = 0;
  std::string route = "all";
};

Outcome do_alpha(const AlphaArgs& a) {
  const auto table = reversion::load_table(a.table);
  Outcome o;
  o.inputs.push_back(a.table);
  o.parameters = {{"n", a.n}, {"route", a.route}};
  json routes = json::object();
  std::optional<reversion::AlphaSeries> first;
  bool agree = true;
  auto add = [&](const std::string& name, const reversion::AlphaSeries& s) {
    routes[name] = strings(s.values);
    if (!first) {
      first = s;
    } else {
      agree = agree && *first == s;
    }
  };
  if (a.route == "lemma" || a.route == "all") add("lemma", reversion::alpha_via_lemma(table, a.n));
  if (a.route == "iteration" || a.route == "all") add("iteration", reversion::alpha_via_iteration(table, a.n));
  if (a.route == "lagrange" || a.route == "all") add("lagrange", reversion::alpha_via_lagrange(table, a.n));
  o.result = {{"alpha", strings(first->values)}, {"routes", routes}, {"routes_agree", agree}};
  if (!agree) throw ValidationFailure("alpha routes disagree");
  return o;
}

// spherical ---------------------------------------------------------------

struct SphericalArgs {
  int order = 60;
  std::vector<int> d_list = {3, 5, 10};
  double tol = 1e-12;
  std::vector<int> pade = {4, 4};
  std::string format = "json";
};

Outcome do_spherical(const SphericalArgs& a) {
  if (a.pade.size() != 2) throw PreconditionError("--pade takes two orders m n");
  Outcome o;
  o.parameters = {{"order", a.order}, {"d", a.d_list}, {"tol", a.tol}, {"pade", a.pade}, {"format", a.format}};
  const auto coeffs = spherical::a_coefficients(a.order);
  const auto runs = spherical::sign_runs(coeffs);
  json run_list = json::array();
  for (const auto& [sign, length] : runs.runs) run_list.push_back({{"sign", sign}, {"length", length}});
  json kc = json::array();
  std::ostringstream csv;
  csv << "d,N,partial_sum,relative_error\n";
  for (int d : a.d_list) {
    const auto direct = spherical::kc_direct(d, a.tol);
    const auto borel = spherical::kc_borel_inverse_function(d, a.tol);
    json pade;
    try {
      const auto p = spherical::kc_borel_pade(d, a.pade[0], a.pade[1], a.tol);
      pade = {{"value", p.result.value}, {"error", p.result.error}, {"m", p.m}, {"n", p.n}, {"n_used", p.used_n}};
    } catch (const PoleError& e) {
      pade = {{"pole", e.location()}, {"m", a.pade[0]}, {"n", a.pade[1]}};
    }
    const auto partials = spherical::kc_asymptotic(d, coeffs);
    const auto trunc = spherical::optimal_truncation(d, coeffs, direct.value);
    for (std::size_t i = 0; i < partials.size(); ++i) {
      csv << d << "," << i + 1 << "," << partials[i] << "," << trunc.errors[i] << "\n";
    }
    kc.push_back({{"d", d},
                  {"direct_integral", direct.value},
                  {"direct_error", direct.error},
                  {"borel_inverse_function", borel.value},
                  {"borel_inverse_function_error", borel.error},
                  {"borel_pade", pade},
                  {"asymptotic_partials", partials},
                  {"optimal_truncation", {{"best_n", trunc.best_n}, {"best_error", trunc.best_error}}}});
  }
  o.result = {{"order", a.order}, {"a", strings(coeffs)}, {"sign_runs", run_list}, {"kc", kc}};
  if (runs.zero_at) o.result["zero_coefficient_at"] = *runs.zero_at;
  if (a.format == "csv") o.text = csv.str();
  return o;
}

// borel -------------------------------------------------------------------

struct BorelArgs {
  std::string coeffs;
  std::string toy;
  int length = 40;
  std::vector<double> s = {0.1};
  int pade_m = -1;
  int pade_n = -1;
  double tol = 1e-12;
};

Outcome do_borel(const BorelArgs& a) {
  Outcome o;
  resummation::CoefficientSource src;
  if (!a.coeffs.empty()) {
    src = resummation::load_source(a.coeffs);
    o.inputs.push_back(a.coeffs);
  } else if (a.toy == "geometric") {
    src = resummation::geometric_source(a.length);
  } else if (a.toy == "alternating") {
    src = resummation::alternating_factorial_source(a.length);
  } else if (a.toy == "catalan") {
    src = resummation::catalan_source(a.length);
  } else if (a.toy == "saw") {
    src = resummation::saw_published_source();
  } else {
    throw PreconditionError("borel needs --coeffs FILE or --toy geometric|alternating|catalan|saw");
  }
  o.parameters = {{"toy", a.toy}, {"length", a.length}, {"s", a.s}, {"pade_m", a.pade_m}, {"pade_n", a.pade_n},
                  {"tol", a.tol}};
  const auto report = resummation::validate_source(src);
  json sums = json::array();
  bool pole = false;
  for (double s : a.s) {
    json entry = {{"s", s}, {"partial_sums", resummation::partial_sums(src, s)}};
    try {
      entry["borel"] = resummation::to_json(resummation::borel_sum(src, s, a.pade_m, a.pade_n, a.tol));
    } catch (const PoleError& e) {
      entry["pole"] = e.location();
      entry["error"] = e.what();
      pole = true;
    }
    sums.push_back(entry);
  }
  o.result = {{"source", {{"origin", src.origin}, {"coefficients", resummation::to_json(src)}}},
              {"validation", resummation::to_json(report)},
              {"sums", sums}};
  if (!report.passed || pole) o.code = kValidationFailure;
  return o;
}

// check -------------------------------------------------------------------

struct CheckArgs {
  std::string suite = "all";
  int theorem1_n_max = 11;
  std::string beta_source = "enumeration";
  std::string beta_file;
};

Outcome do_check(const CheckArgs& a, const Globals& g) {
  Outcome o;
  o.parameters = {{"suite", a.suite}, {"seed", g.seed}, {"theorem1_n_max", a.theorem1_n_max},
                  {"beta_source", a.beta_source}};
  SuiteOptions so;
  so.seed = g.seed;
  so.workers = g.jobs;
  so.theorem1_n_max = a.theorem1_n_max;
  so.cache_dir = cache_dir(g);
  if (a.beta_source == "file") {
    if (a.beta_file.empty()) throw PreconditionError("--beta-source file needs --beta-file");
    std::ifstream in(a.beta_file);
    if (!in) throw PreconditionError("cannot open " + a.beta_file);
    try {
      in >> so.beta_overrides;
    } catch (const json::exception& e) {
      throw PreconditionError("beta file is not valid JSON: " + std::string(e.what()));
    }
    if (!so.beta_overrides.is_object()) throw PreconditionError("beta file must map dimension to beta_c");
    o.inputs.push_back(a.beta_file);
  }
  bool passed = true;
  auto add = [&](const std::string& name, const SuiteResult& r) {
    o.result[name] = r.report;
    passed = passed && r.passed;
  };
  if (a.suite == "lemmas" || a.suite == "all") add("lemmas", run_lemma_suite(so));
  if (a.suite == "walks" || a.suite == "all") add("walks", run_walk_suite(so));
  if (a.suite == "theorem1" || a.suite == "all") add("theorem1", run_theorem1_suite(so));
  o.result["passed"] = passed;
  if (!passed) o.code = kValidationFailure;
  return o;
}

void emit(const std::string& name, Outcome& o, const Globals& g, double seconds, std::ostream& out) {
  store::RunManifest manifest;
  manifest.subcommand = name;
  manifest.parameters = o.parameters;
  manifest.tool_version = tool_version();
  for (const auto& path : o.inputs) manifest.input_digests[path] = store::file_digest(path);
  const json document = {{"manifest_digest", manifest.digest()}, {"result", o.result}};
  const std::string body = o.text.empty() ? document.dump(2) + "\n" : o.text;
  manifest.output_digest = store::sha256_hex(body);
  manifest.wall_time_seconds = seconds;
  if (g.out_path.empty()) {
    out << body;
  } else {
    store::atomic_write(g.out_path, body);
  }
  std::string manifest_path = g.manifest_path;
  if (manifest_path.empty() && !g.out_path.empty()) manifest_path = g.out_path + ".manifest.json";
  if (!manifest_path.empty()) store::atomic_write(manifest_path, manifest.to_json().dump(2) + "\n");
}

}  // namespace

std::string tool_version() { return DDSERIES_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact series, walk enumeration and Borel summation for 1/d expansions", "ddseries"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", tool_version());
  Globals g;
  app.add_option("--out", g.out_path, "Write the result here instead of stdout");
  app.add_option("--cache", g.cache_dir, "Cache directory (DDSERIES_CACHE overrides)");
  app.add_option("--manifest", g.manifest_path, "Manifest path (default <out>.manifest.json)");
  app.add_option("--seed", g.seed, "Seed for randomized suites");
  app.add_option("--jobs", g.jobs, "Worker threads (0 = all cores)");

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Count walks on Z^d");
  enumerate->add_option("--model", ea.model)->check(CLI::IsMember({"saw", "memory", "simple"}));
  enumerate->add_option("--tau", ea.tau, "Memory length for --model memory");
  enumerate->add_option("--d", ea.d)->required()->check(CLI::Range(1, 64));
  enumerate->add_option("--n", ea.n)->required()->check(CLI::Range(1, 64));
  enumerate->add_option("--format", ea.format)->check(CLI::IsMember({"json", "csv"}));
  enumerate->add_option("--budget", ea.budget, "DFS node budget");

  DimpolyArgs da;
  auto* dimpoly = app.add_subcommand("dimpoly", "Canonical classes and dimensional polynomials");
  dimpoly->add_option("--model", da.model)->check(CLI::IsMember({"saw", "memory"}));
  dimpoly->add_option("--tau", da.tau);
  dimpoly->add_option("--n-max", da.n_max)->required()->check(CLI::Range(1, 20));
  dimpoly->add_option("--ambient", da.ambient, "Ambient dimension (default n-max)");

  AlphaArgs aa;
  auto* alpha = app.add_subcommand("alpha", "alpha_n from a coefficient table");
  alpha->add_option("--table", aa.table)->required()->check(CLI::ExistingFile);
  alpha->add_option("--n", aa.n)->required()->check(CLI::Range(1, 200));
  alpha->add_option("--route", aa.route)->check(CLI::IsMember({"lemma", "iteration", "lagrange", "all"}));

  SphericalArgs sa;
  auto* sph = app.add_subcommand("spherical", "Spherical-model series and K_c(d)");
  sph->add_option("--order", sa.order)->check(CLI::Range(2, 1000));
  sph->add_option("--d", sa.d_list)->check(CLI::Range(3, 1000));
  sph->add_option("--tol", sa.tol);
  sph->add_option("--pade", sa.pade, "Pade orders m n for (g^-1)'")->expected(2);
  sph->add_option("--format", sa.format)->check(CLI::IsMember({"json", "csv"}));

  BorelArgs ba;
  auto* borel = app.add_subcommand("borel", "Borel-Pade sum of a coefficient list");
  borel->add_option("--coeffs", ba.coeffs)->check(CLI::ExistingFile);
  borel->add_option("--toy", ba.toy)->check(CLI::IsMember({"geometric", "alternating", "catalan", "saw"}));
  borel->add_option("--length", ba.length)->check(CLI::Range(1, 400));
  borel->add_option("--s", ba.s)->check(CLI::PositiveNumber);
  borel->add_option("--pade-m", ba.pade_m);
  borel->add_option("--pade-n", ba.pade_n);
  borel->add_option("--tol", ba.tol)->check(CLI::PositiveNumber);

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Run a verification suite");
  check->add_option("--suite", ca.suite)->check(CLI::IsMember({"lemmas", "walks", "theorem1", "all"}));
  check->add_option("--n-max", ca.theorem1_n_max, "SAW length behind beta_hat")->check(CLI::Range(6, 13));
  check->add_option("--beta-source", ca.beta_source)->check(CLI::IsMember({"enumeration", "file"}));
  check->add_option("--beta-file", ca.beta_file)->check(CLI::ExistingFile);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o;
    std::string name;
    if (*enumerate) {
      name = "enumerate";
      o = do_enumerate(ea, g, err);
    } else if (*dimpoly) {
      name = "dimpoly";
      o = do_dimpoly(da, g);
    } else if (*alpha) {
      name = "alpha";
      o = do_alpha(aa);
    } else if (*sph) {
      name = "spherical";
      o = do_spherical(sa);
    } else if (*borel) {
      name = "borel";
      o = do_borel(ba);
    } else {
      name = "check";
      o = do_check(ca, g);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(name, o, g, seconds, out);
    return o.code;
  } catch (const ValidationFailure& e) {
    err << "validation failure: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const PoleError& e) {
    err << "pole: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ConvergenceError& e) {
    err << "no convergence: " << e.what() << "\n";
    return kBudget;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SeriesError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace ddseries::cli
