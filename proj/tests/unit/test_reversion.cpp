#include <doctest.h>

#include <random>

#include "ddseries/error.hpp"
#include "ddseries/reversion/alpha.hpp"
#include "ddseries/reversion/bounds.hpp"
#include "ddseries/reversion/ctable.hpp"

using namespace ddseries;
using namespace ddseries::reversion;
using exact::BigInt;
using exact::make_rational;

namespace {

std::vector<Rational> catalan_shifted(int n_max) {
  // alpha_n = Cat(n-1) = binom(2n-2, n-1) / n
  std::vector<Rational> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(Rational(exact::binomial(2 * n - 2, n - 1)) / n);
  return out;
}

CTable catalan_table() {
  CTable t(1);
  t.set(2, 1, 1);
  return t;
}

}  // namespace

TEST_CASE("index set membership and table validation") {
  CHECK(in_index_set(2, 1));
  CHECK_FALSE(in_index_set(3, 1));
  CHECK(in_index_set(4, 2));
  CHECK_FALSE(in_index_set(2, 2));
  CTable t(2);
  CHECK_THROWS_AS(t.set(1, 1, 1), PreconditionError);
  CHECK_THROWS_AS(t.set(6, 3, 1), PreconditionError);
  t.set(3, 2, make_rational(-1, 2));
  t.set(4, 2, 2);
  CHECK(t.row_abs_sum(2) == make_rational(5, 2));
  CHECK(table_from_json(to_json(t)) == t);
  CHECK_THROWS_AS(table_from_json(nlohmann::json::parse(R"({"max_b":2,"entries":[{"a":5,"b":2,"value":"1"}]})")),
                  PreconditionError);
}

TEST_CASE("alpha routes on the empty table") {
  const CTable empty(0);
  const AlphaSeries expected{{1, 0, 0, 0, 0}};
  CHECK(alpha_via_lemma(empty, 5) == expected);
  CHECK(alpha_via_iteration(empty, 5) == expected);
  CHECK(alpha_via_lagrange(empty, 5) == expected);
  CHECK_THROWS_AS(alpha_via_lemma(empty, 0), PreconditionError);
}

TEST_CASE("Catalan table on all routes") {
  const auto expected = catalan_shifted(10);
  CHECK(std::vector<Rational>(expected.begin(), expected.begin() + 6) == std::vector<Rational>{1, 1, 2, 5, 14, 42});
  CHECK(alpha_via_lemma(catalan_table(), 10).values == expected);
  CHECK(alpha_via_iteration(catalan_table(), 10).values == expected);
  CHECK(alpha_via_lagrange(catalan_table(), 10).values == expected);
}

TEST_CASE("fixed-point iterates") {
  // two passes: s + s^2, exact through order 2
  const auto two = iterate_beta(catalan_table(), 6, 2);
  CHECK(two[1] == 1);
  CHECK(two[2] == 1);
  // beta = (1 - sqrt(1 - 4s)) / 2 satisfies beta^2 = beta - s; check on the fixed point
  const auto full = iterate_beta(catalan_table(), 8, 9);
  const auto sq = full * full;
  for (int n = 2; n <= 8; ++n) CHECK(sq[n] == full[n]);
  CHECK(full[1] == 1);
}

TEST_CASE("third coefficient matches 2 c21^2 + c32 + c42") {
  CTable t(2);
  t.set(2, 1, 1);
  t.set(3, 2, 1);
  t.set(4, 2, 1);
  CHECK(alpha_via_lemma(t, 3)(3) == 4);
  CTable general(2);
  general.set(2, 1, make_rational(3, 2));
  general.set(3, 2, -2);
  general.set(4, 2, make_rational(1, 3));
  const auto alpha = alpha_via_iteration(general, 3);
  CHECK(alpha(2) == make_rational(3, 2));
  CHECK(alpha(3) == 2 * make_rational(9, 4) - 2 + make_rational(1, 3));
}

TEST_CASE("route equality on random tables") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> max_b(1, 5);
  std::uniform_int_distribution<int> n_max(1, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const auto table = random_table(rng, max_b(rng));
    const int n = n_max(rng);
    const auto lemma = alpha_via_lemma(table, n);
    CHECK(lemma == alpha_via_iteration(table, n));
    CHECK(lemma == alpha_via_lagrange(table, n));
    CHECK(lemma(1) == 1);
  }
}

TEST_CASE("truncation locality") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    auto table = random_table(rng, 5);
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto before = alpha_via_lemma(table, n);
    for (int b = n; b <= 5; ++b) table.set(b + 1, b, table.get(b + 1, b) + 7);
    CHECK(alpha_via_lemma(table, n) == before);
  }
}

TEST_CASE("nonnegative tables give monotone nonnegative alphas") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    CTable table(3);
    for (int b = 1; b <= 3; ++b)
      for (int a = b + 1; a <= 2 * b; ++a) table.set(a, b, make_rational(static_cast<long>(rng() % 5), 1 + rng() % 3));
    const auto base = alpha_via_lemma(table, 7);
    for (const auto& v : base.values) CHECK(v >= 0);
    for (const auto& [key, value] : table.entries()) {
      auto bumped = table;
      bumped.set(key.a, key.b, value + make_rational(1, 2));
      const auto after = alpha_via_lemma(bumped, 7);
      for (int n = 1; n <= 7; ++n) CHECK(after(n) >= base(n));
    }
  }
}

TEST_CASE("alpha factorial bound") {
  const auto catalan = check_alpha_factorial_bound(catalan_table(), 1, 10);
  CHECK(catalan.passed);
  CHECK(catalan.max_ratio < 1e-1);
  CHECK(check_alpha_factorial_bound(CTable(0), 1, 6).passed);
  // extremal rows: c_{b+1,b} = C3^b b!
  const Rational c3 = 2;
  CTable extremal(7);
  for (int b = 1; b <= 7; ++b) extremal.set(b + 1, b, exact::pow(c3, b) * exact::factorial(b));
  const auto r = check_alpha_factorial_bound(extremal, c3, 8);
  CHECK(r.passed);
  CHECK(r.ratios.size() == 8);
  CHECK_THROWS_WITH_AS(check_alpha_factorial_bound(extremal, 1, 8), doctest::Contains("b = 1"), PreconditionError);
}

TEST_CASE("phi power bound") {
  CHECK(phi_power(5, 1) == std::vector<BigInt>{1, 1, 2, 6, 24, 120});
  // (l1, l2) in {(0,2),(1,1),(2,0)} gives 2 + 1 + 2
  CHECK(phi_power(2, 2)[2] == 5);
  const auto report = check_phi_power_bound(14, 14);
  CHECK(report.passed);
  CHECK(report.cases == 14 * 15);
  const auto& eq = report.equality_cases;
  CHECK(std::find(eq.begin(), eq.end(), std::pair{2, 2}) != eq.end());
  CHECK(std::find(eq.begin(), eq.end(), std::pair{1, 7}) != eq.end());
  CHECK(report.max_ratio == doctest::Approx(1.0));
  CHECK_THROWS_AS(check_phi_power_bound(15, 3), PreconditionError);
}

TEST_CASE("psi power bound") {
  CHECK(psi_power(3, 2)[3] == 4);
  CHECK(psi_power(6, 6)[6] == 1);
  CHECK(psi_power(5, 1)[5] == 120);
  const auto report = check_psi_power_bound(14, 14);
  CHECK(report.passed);
  CHECK(report.failures.empty());
  CHECK(report.max_ratio <= 1.0);
}
