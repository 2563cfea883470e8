#pragma once

#include <json.hpp>

#include <span>
#include <vector>

#include "ddseries/exact/rational.hpp"
#include "ddseries/exact/series.hpp"

namespace ddseries::exact {

// {"order": N, "coeffs": ["num/den", ...]} with exactly N+1 entries.
nlohmann::json series_to_json(const PowerSeries& s);
PowerSeries series_from_json(const nlohmann::json& j);

nlohmann::json rationals_to_json(std::span<const Rational> values);
nlohmann::json bigints_to_json(std::span<const BigInt> values);
std::vector<BigInt> bigints_from_json(const nlohmann::json& j);

}  // namespace ddseries::exact
