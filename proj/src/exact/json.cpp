#include "ddseries/exact/json.hpp"

#include "ddseries/error.hpp"

namespace ddseries::exact {

nlohmann::json series_to_json(const PowerSeries& s) {
  return {{"order", s.order()}, {"coeffs", rationals_to_json(s.coeffs())}};
}

PowerSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
    throw PreconditionError("series JSON needs 'order' and 'coeffs'");
  }
  const auto& order = j.at("order");
  const auto& coeffs = j.at("coeffs");
  if (!order.is_number_integer() || !coeffs.is_array()) {
    throw PreconditionError("series JSON has malformed 'order' or 'coeffs'");
  }
  if (order.get<long>() < 0 || coeffs.size() != static_cast<std::size_t>(order.get<long>()) + 1) {
    throw PreconditionError("series JSON: coeffs length must be order + 1");
  }
  std::vector<Rational> values;
  values.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (!c.is_string()) throw PreconditionError("series coefficients must be \"num/den\" strings");
    values.push_back(parse_rational(c.get<std::string>()));
  }
  return PowerSeries(std::move(values));
}

nlohmann::json rationals_to_json(std::span<const Rational> values) {
  auto out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

nlohmann::json bigints_to_json(std::span<const BigInt> values) {
  auto out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

std::vector<BigInt> bigints_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw PreconditionError("expected an array of decimal strings");
  std::vector<BigInt> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_string()) throw PreconditionError("big integers must be decimal strings");
    out.push_back(parse_bigint(v.get<std::string>()));
  }
  return out;
}

}  // namespace ddseries::exact
