#include "ddseries/walks/canonical.hpp"

#include "budgeted.hpp"
#include "ddseries/error.hpp"
#include "ddseries/exact/json.hpp"

namespace ddseries::walks {

DimTable canonical_classes(const WalkModel& model, int n_max, int ambient, const EnumerateOptions& options) {
  if (model.kind == ModelKind::Simple) throw PreconditionError("canonical classes need a saw or memory model");
  if (n_max < 1) throw PreconditionError("n_max must be >= 1");
  if (ambient == 0) ambient = n_max;
  if (ambient < 1) throw PreconditionError("ambient dimension must be >= 1");
  detail::SearchSpec spec{model, ambient, n_max, true};
  const auto result = detail::budgeted_search(spec, options);
  DimTable table{model, result.attained, ambient, {}};
  for (int n = 0; n <= result.attained; ++n) {
    std::vector<BigInt> row;
    for (int dim = 0; dim <= ambient; ++dim) row.emplace_back(static_cast<unsigned long>(result.tally.at(n, dim)));
    table.f.push_back(std::move(row));
  }
  return table;
}

exact::FallingFactorialPoly dimensional_polynomial(const DimTable& table, int n) {
  if (n < 0 || n > table.n_max) {
    throw PreconditionError("length " + std::to_string(n) + " outside the class table (max " +
                            std::to_string(table.n_max) + ")");
  }
  exact::FallingFactorialPoly poly;
  for (int dim = 0; dim <= table.ambient; ++dim) {
    if (table.at(n, dim) != 0) poly.set(dim, exact::Rational(table.at(n, dim)));
  }
  return poly;
}

WalkCensus census_from_classes(const DimTable& table, int d) {
  if (d < 1) throw PreconditionError("dimension d must be >= 1");
  if (d > table.ambient && table.ambient < table.n_max) {
    throw PreconditionError("class table generated in ambient dimension " + std::to_string(table.ambient) +
                            " cannot represent d = " + std::to_string(d));
  }
  WalkCensus census{table.model, d, {}, table.n_max};
  for (int n = 1; n <= table.n_max; ++n) {
    const auto value = dimensional_polynomial(table, n).evaluate(d);
    census.counts.push_back(value.get_num());
  }
  return census;
}

nlohmann::json to_json(const DimTable& table) {
  nlohmann::json tau;
  if (const auto memory = table.model.memory_length()) {
    tau = *memory;
  } else {
    tau = "inf";
  }
  auto rows = nlohmann::json::array();
  for (const auto& row : table.f) rows.push_back(exact::bigints_to_json(row));
  return {{"model", table.model.name()}, {"tau", tau}, {"n_max", table.n_max}, {"ambient", table.ambient}, {"f", rows}};
}

DimTable dim_table_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("model") || !j.contains("n_max") || !j.contains("ambient") || !j.contains("f")) {
    throw PreconditionError("dimension table JSON needs model, n_max, ambient, f");
  }
  std::optional<int> tau;
  if (j.at("tau").is_number_integer()) tau = j.at("tau").get<int>();
  DimTable table;
  table.model = parse_model(j.at("model").get<std::string>(), tau);
  table.n_max = j.at("n_max").get<int>();
  table.ambient = j.at("ambient").get<int>();
  for (const auto& row : j.at("f")) table.f.push_back(exact::bigints_from_json(row));
  if (table.f.size() != static_cast<std::size_t>(table.n_max) + 1) {
    throw PreconditionError("dimension table has the wrong number of rows");
  }
  for (const auto& row : table.f) {
    if (row.size() != static_cast<std::size_t>(table.ambient) + 1) {
      throw PreconditionError("dimension table row has the wrong width");
    }
  }
  return table;
}

}  // namespace ddseries::walks
