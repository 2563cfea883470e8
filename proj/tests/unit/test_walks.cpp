#include <doctest.h>

#include <functional>

#include "ddseries/error.hpp"
#include "ddseries/walks/canonical.hpp"
#include "ddseries/walks/census.hpp"
#include "ddseries/walks/simple.hpp"

using namespace ddseries;
using namespace ddseries::walks;
using exact::BigInt;

namespace {

EnumerateOptions small_jobs(unsigned workers = 2) {
  EnumerateOptions o;
  o.workers = workers;
  return o;
}

// Counts step sequences of length k ending at `target`, by plain recursion.
BigInt count_paths(int d, int k, std::vector<int> pos, const std::vector<int>& target) {
  if (k == 0) return pos == target ? 1 : 0;
  BigInt total = 0;
  for (int i = 0; i < d; ++i) {
    for (int sgn : {1, -1}) {
      pos[i] += sgn;
      total += count_paths(d, k - 1, pos, target);
      pos[i] -= sgn;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("saw counts in the plane") {
  const auto c = enumerate(WalkModel::saw(), 2, 4, small_jobs());
  REQUIRE(c.max_length() == 4);
  CHECK(c.count(1) == 4);
  CHECK(c.count(2) == 12);
  CHECK(c.count(3) == 36);
  CHECK(c.count(4) == 100);
  CHECK_FALSE(c.partial());
}

TEST_CASE("brute force small cases") {
  CHECK(brute_force_enumerate(WalkModel::saw(), 1, 2).count(2) == 2);
  const auto mem = brute_force_enumerate(WalkModel::memory(4), 2, 6);
  const auto saw = brute_force_enumerate(WalkModel::saw(), 2, 6);
  CHECK(mem.count(6) >= saw.count(6));
  CHECK_THROWS_AS(brute_force_enumerate(WalkModel::saw(), 3, 12), BudgetExceeded);
}

TEST_CASE("enumerate matches brute force for every model") {
  std::vector<WalkModel> models = {WalkModel::saw(), WalkModel::simple()};
  for (int tau = 2; tau <= 6; ++tau) models.push_back(WalkModel::memory(tau));
  for (const auto& model : models) {
    for (int d = 1; d <= 2; ++d) {
      const auto fast = enumerate(model, d, 8, small_jobs());
      const auto slow = brute_force_enumerate(model, d, 8);
      CAPTURE(model.label());
      CAPTURE(d);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("worker count does not change the census") {
  const auto one = enumerate(WalkModel::saw(), 3, 9, small_jobs(1));
  const auto four = enumerate(WalkModel::saw(), 3, 9, small_jobs(4));
  CHECK(one == four);
}

TEST_CASE("memory-2 is non-reversing walk") {
  for (int d = 1; d <= 4; ++d) {
    const auto c = enumerate(WalkModel::memory(2), d, 7, small_jobs());
    for (int n = 1; n <= 7; ++n) {
      CHECK(c.count(n) == BigInt(2 * d) * exact::pow(BigInt(2 * d - 1), static_cast<unsigned long>(n - 1)));
    }
  }
}

TEST_CASE("simple walk census in one dimension") {
  const auto c = enumerate(WalkModel::simple(), 1, 10, small_jobs());
  for (int n = 1; n <= 10; ++n) CHECK(c.count(n) == exact::pow(BigInt(2), static_cast<unsigned long>(n)));
}

TEST_CASE("memory monotonicity and saw submultiplicativity") {
  for (int d = 2; d <= 3; ++d) {
    const int n_max = d == 2 ? 12 : 9;
    const auto saw = enumerate(WalkModel::saw(), d, n_max, small_jobs());
    WalkCensus prev = enumerate(WalkModel::memory(2), d, n_max, small_jobs());
    for (int tau = 3; tau <= 8; ++tau) {
      const auto cur = enumerate(WalkModel::memory(tau), d, n_max, small_jobs());
      for (int n = 1; n <= n_max; ++n) {
        CHECK(prev.count(n) >= cur.count(n));
        CHECK(cur.count(n) >= saw.count(n));
      }
      prev = cur;
    }
    for (int n = 1; n <= n_max; ++n)
      for (int m = 1; n + m <= n_max; ++m) CHECK(saw.count(n + m) <= saw.count(n) * saw.count(m));
  }
}

TEST_CASE("node budget yields a partial census") {
  EnumerateOptions o = small_jobs();
  o.node_budget = 20'000;
  const auto c = enumerate(WalkModel::saw(), 2, 20, o);
  CHECK(c.partial());
  CHECK(c.max_length() >= 6);
  CHECK(c.max_length() < 20);
  CHECK(c.count(4) == 100);
  o.node_budget = 10;
  CHECK_THROWS_AS(enumerate(WalkModel::saw(), 2, 20, o), BudgetExceeded);
}

TEST_CASE("census json and csv round trip") {
  const auto c = enumerate(WalkModel::memory(4), 2, 6, small_jobs());
  CHECK(census_from_json(to_json(c)) == c);
  const auto csv = to_csv(c);
  CHECK(csv.rfind("n,count\n1,4\n", 0) == 0);
  const auto s = enumerate(WalkModel::saw(), 2, 5, small_jobs());
  CHECK(census_from_json(to_json(s)) == s);
}

TEST_CASE("canonical class examples") {
  const auto t = canonical_classes(WalkModel::saw(), 4, 0, small_jobs());
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 1) == 1);
  CHECK(t.at(2, 1) == 1);
  CHECK(t.at(2, 2) == 1);
  CHECK(dimensional_polynomial(t, 1).evaluate(7) == 14);
  for (int d = 1; d <= 6; ++d) CHECK(dimensional_polynomial(t, 2).evaluate(d) == 2 * d * (2 * d - 1));
  CHECK(dimensional_polynomial(t, 4).evaluate(2) == 100);
  for (int n = 0; n <= 4; ++n)
    for (int dim = n + 1; dim <= t.ambient; ++dim) CHECK(t.at(n, dim) == 0);
  CHECK_THROWS_AS(canonical_classes(WalkModel::simple(), 4), PreconditionError);
  CHECK_THROWS_AS(dimensional_polynomial(t, 5), PreconditionError);
}

TEST_CASE("dimensional polynomials reproduce direct enumeration") {
  std::vector<WalkModel> models = {WalkModel::saw(), WalkModel::memory(2), WalkModel::memory(4)};
  for (const auto& model : models) {
    const auto table = canonical_classes(model, 10, 0, small_jobs());
    REQUIRE(table.n_max == 10);
    for (int n = 1; n <= 10; ++n) CHECK(table.at(n, 1) >= 1);
    for (int d = 1; d <= 3; ++d) {
      const auto direct = enumerate(model, d, 10, small_jobs());
      CAPTURE(model.label());
      CAPTURE(d);
      CHECK(census_from_classes(table, d) == direct);
    }
  }
}

TEST_CASE("class counts are independent of the ambient dimension") {
  for (const auto& model : {WalkModel::saw(), WalkModel::memory(4)}) {
    const auto a = canonical_classes(model, 9, 9, small_jobs());
    const auto b = canonical_classes(model, 9, 10, small_jobs());
    for (int n = 0; n <= 9; ++n)
      for (int dim = 0; dim <= 9; ++dim) CHECK(a.at(n, dim) == b.at(n, dim));
    CHECK(b.at(9, 10) == 0);
  }
}

TEST_CASE("dim table json round trip") {
  const auto t = canonical_classes(WalkModel::memory(4), 6, 0, small_jobs());
  CHECK(dim_table_from_json(to_json(t)) == t);
}

TEST_CASE("simple walk endpoint counts") {
  for (int d = 1; d <= 4; ++d) {
    const auto c = simple_walk_counts(d, 2);
    CHECK(c.returns.at(2) == 2 * d);
  }
  const auto one = simple_walk_counts(1, 8);
  for (int m = 1; m <= 8; ++m) CHECK(one.returns.at(2 * m) == exact::binomial(2 * m, m));
  const auto two = simple_walk_counts(2, 3);
  CHECK(two.returns.at(4) == 36);
  CHECK(two.returns.at(4) == count_paths(2, 4, {0, 0}, {0, 0}));
  CHECK(two.to_neighbor.at(5) == count_paths(2, 5, {0, 0}, {1, 0}));
  const auto three = simple_walk_counts(3, 2);
  CHECK(three.returns.at(4) == count_paths(3, 4, {0, 0, 0}, {0, 0, 0}));
}

TEST_CASE("simple walk bounds hold for d <= 4, m <= 6") {
  for (int d = 1; d <= 4; ++d) {
    const auto report = check_simple_walk_bounds(simple_walk_counts(d, 6));
    CAPTURE(d);
    CHECK(report.passed);
    REQUIRE(report.rows.size() == 6);
    for (const auto& row : report.rows) {
      CHECK(row.identity);
      CHECK(row.maximal);
      CHECK(row.subspace);
      CHECK(row.factorial);
    }
  }
  const auto d1 = check_simple_walk_bounds(simple_walk_counts(1, 1));
  CHECK(d1.rows.at(0).factorial_ratio == doctest::Approx(4.0 / 40.0));
  const auto d2 = check_simple_walk_bounds(simple_walk_counts(2, 2));
  CHECK(d2.rows.at(1).subspace_ratio == doctest::Approx(36.0 / 256.0));
}
