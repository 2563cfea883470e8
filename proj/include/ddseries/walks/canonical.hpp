#pragma once

#include <json.hpp>

#include <vector>

#include "ddseries/exact/ffpoly.hpp"
#include "ddseries/walks/census.hpp"
#include "ddseries/walks/model.hpp"

namespace ddseries::walks {

// f(n, D): number of classes of n-step walks using exactly D axes, modulo
// signed permutations of the coordinates. Each class has exactly
// 2d (2d-2) ... (2d-2D+2) members in Z^d.
struct DimTable {
  WalkModel model;
  int n_max = 0;    // lengths 0 .. n_max are complete
  int ambient = 0;  // dimension the canonical walks were generated in
  std::vector<std::vector<BigInt>> f;  // f[n][D], D = 0 .. ambient

  const BigInt& at(int n, int dim) const { return f.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(dim)); }
  friend bool operator==(const DimTable&, const DimTable&) = default;
};

// Enumerates canonical walks only: axes are first used in the order
// 1, 2, 3, ... and the first step along each axis is positive. Every
// signed-permutation orbit has exactly one such representative and a
// trivial stabilizer. ambient = 0 means ambient = n_max, which is large
// enough for every length. Saw and memory models only.
DimTable canonical_classes(const WalkModel& model, int n_max, int ambient = 0, const EnumerateOptions& options = {});

// sum_D f(n, D) X (X-2) ... (X-2D+2) with X = 2d.
exact::FallingFactorialPoly dimensional_polynomial(const DimTable& table, int n);

// Exact census in Z^d obtained by evaluating the dimensional polynomials.
// Requires d <= ambient or ambient >= table length (all classes present).
WalkCensus census_from_classes(const DimTable& table, int d);

nlohmann::json to_json(const DimTable& table);
DimTable dim_table_from_json(const nlohmann::json& j);

}  // namespace ddseries::walks
