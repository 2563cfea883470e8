#include "ddseries/reversion/ctable.hpp"

#include <fstream>
#include <string>

#include "ddseries/error.hpp"

namespace ddseries::reversion {

bool in_index_set(int a, int b) { return b >= 1 && a >= b + 1 && a <= 2 * b; }

CTable::CTable(int max_b) : max_b_(max_b) {
  if (max_b < 0) throw PreconditionError("max_b must be non-negative");
}

void CTable::set(int a, int b, const Rational& value) {
  if (!in_index_set(a, b)) {
    throw PreconditionError("key (" + std::to_string(a) + ", " + std::to_string(b) +
                            ") is outside the index set b+1 <= a <= 2b");
  }
  if (b > max_b_) {
    throw PreconditionError("key (" + std::to_string(a) + ", " + std::to_string(b) + ") exceeds max_b " +
                            std::to_string(max_b_));
  }
  if (sgn(value) == 0) {
    entries_.erase({a, b});
  } else {
    entries_[{a, b}] = value;
  }
}

Rational CTable::get(int a, int b) const {
  const auto it = entries_.find({a, b});
  return it == entries_.end() ? Rational(0) : it->second;
}

Rational CTable::row_abs_sum(int b) const {
  Rational total = 0;
  for (int a = b + 1; a <= 2 * b; ++a) total += exact::abs(get(a, b));
  return total;
}

CTable CTable::restricted(int limit) const {
  CTable out(std::min(max_b_, std::max(limit, 0)));
  for (const auto& [key, value] : entries_) {
    if (key.b <= limit) out.entries_.emplace(key, value);
  }
  return out;
}

nlohmann::json to_json(const CTable& table) {
  auto entries = nlohmann::json::array();
  for (const auto& [key, value] : table.entries()) {
    entries.push_back({{"a", key.a}, {"b", key.b}, {"value", exact::to_string(value)}});
  }
  return {{"max_b", table.max_b()}, {"entries", entries}};
}

CTable table_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("max_b") || !j.contains("entries") || !j.at("max_b").is_number_integer() ||
      !j.at("entries").is_array()) {
    throw PreconditionError("c-table JSON needs integer 'max_b' and array 'entries'");
  }
  CTable table(j.at("max_b").get<int>());
  for (const auto& e : j.at("entries")) {
    if (!e.is_object() || !e.contains("a") || !e.contains("b") || !e.contains("value") ||
        !e.at("a").is_number_integer() || !e.at("b").is_number_integer() || !e.at("value").is_string()) {
      throw PreconditionError("c-table entry needs integer a, b and string value");
    }
    table.set(e.at("a").get<int>(), e.at("b").get<int>(), exact::parse_rational(e.at("value").get<std::string>()));
  }
  return table;
}

CTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open c-table file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError("c-table file " + path.string() + " is not valid JSON: " + e.what());
  }
  return table_from_json(j);
}

CTable random_table(std::mt19937_64& rng, int max_b) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  CTable table(max_b);
  for (int b = 1; b <= max_b; ++b) {
    for (int a = b + 1; a <= 2 * b; ++a) {
      const long n = num(rng);
      const long d = den(rng);
      table.set(a, b, exact::make_rational(n, d));
    }
  }
  return table;
}

}  // namespace ddseries::reversion
