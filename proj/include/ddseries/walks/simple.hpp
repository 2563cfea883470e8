#pragma once

#include <json.hpp>

#include <map>
#include <vector>

#include "ddseries/exact/rational.hpp"

namespace ddseries::walks {

using exact::BigInt;

// Exact endpoint counts of simple random walks c_k(x) on Z^d.
struct SimpleWalkCounts {
  int d = 0;
  int m_max = 0;
  std::map<int, BigInt> returns;      // 2m -> c_{2m}(0)
  std::map<int, BigInt> to_neighbor;  // 2m - 1 -> c_{2m-1}(e_1)
  std::map<int, BigInt> sup_even;     // 2m -> max over x of c_{2m}(x)
};

SimpleWalkCounts simple_walk_counts(int d, int m_max);

struct SimpleBoundRow {
  int m = 0;
  bool identity = false;      // 2d c_{2m-1}(e_1) == c_{2m}(0)
  bool maximal = false;       // c_{2m}(0) is the largest even-length count
  bool subspace = false;      // c_{2m}(0) <= binom(d, m) (2m)^{2m} for m <= d, (2d)^{2m} otherwise
  bool factorial = false;     // 2m c_{2m}(0) <= 20^m (2d)^m m!
  double subspace_ratio = 0;  // lhs / rhs
  double factorial_ratio = 0;
};

struct SimpleBoundReport {
  int d = 0;
  bool passed = true;
  std::vector<SimpleBoundRow> rows;
  double worst_subspace_ratio = 0;
  double worst_factorial_ratio = 0;
};

SimpleBoundReport check_simple_walk_bounds(const SimpleWalkCounts& counts);

nlohmann::json to_json(const SimpleWalkCounts& counts);
nlohmann::json to_json(const SimpleBoundReport& report);

}  // namespace ddseries::walks
