#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <utility>

#include "ddseries/exact/rational.hpp"

namespace ddseries::reversion {

using exact::Rational;

// Key (a, b) of the coefficient table; a is a lace-graph length and b - a
// the power of s it contributes.
struct TableKey {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const TableKey&, const TableKey&) = default;
};

// True iff b >= 1 and b + 1 <= a <= 2b.
bool in_index_set(int a, int b);

// Sparse table of c_{a,b} over the index set I restricted to b <= max_b.
class CTable {
 public:
  explicit CTable(int max_b = 0);

  int max_b() const { return max_b_; }
  const std::map<TableKey, Rational>& entries() const { return entries_; }

  // Throws PreconditionError for keys outside I or beyond max_b. Setting a
  // zero value removes the entry.
  void set(int a, int b, const Rational& value);
  Rational get(int a, int b) const;

  // c_b = sum_a |c_{a,b}|
  Rational row_abs_sum(int b) const;

  // Entries with b <= limit only.
  CTable restricted(int limit) const;

  friend bool operator==(const CTable&, const CTable&) = default;

 private:
  int max_b_;
  std::map<TableKey, Rational> entries_;
};

// {"max_b": B, "entries": [{"a": int, "b": int, "value": "num/den"}, ...]}
nlohmann::json to_json(const CTable& table);
CTable table_from_json(const nlohmann::json& j);
CTable load_table(const std::filesystem::path& path);

// Every key of I with b <= max_b gets numerator U[-9, 9] over denominator
// U[1, 4].
CTable random_table(std::mt19937_64& rng, int max_b);

}  // namespace ddseries::reversion
