#include "ddseries/reversion/alpha.hpp"

#include <string>

#include "ddseries/error.hpp"
#include "ddseries/exact/laurent.hpp"

namespace ddseries::reversion {

using exact::BigInt;
using exact::LaurentPoly;
using exact::PowerSeries;

namespace {

void require_order(int n_max) {
  if (n_max < 1) throw PreconditionError("n_max must be >= 1");
}

struct Entry {
  int a;
  int b;
  Rational value;
};

// Lexicographic (a, b) list of the entries that can reach alpha_{n_max}.
std::vector<Entry> usable_entries(const CTable& table, int n_max) {
  std::vector<Entry> out;
  for (const auto& [key, value] : table.entries()) {
    if (key.b <= n_max - 1) out.push_back({key.a, key.b, value});
  }
  return out;
}

class LemmaSum {
 public:
  LemmaSum(std::vector<Entry> entries, int n_max)
      : entries_(std::move(entries)), n_max_(n_max), counts_(entries_.size(), 0), sums_(n_max) {
    // sum a n_{a,b} <= 2 sum b n_{a,b} <= 2 (n_max - 1)
    factorials_.reserve(static_cast<std::size_t>(2 * n_max));
    factorials_.emplace_back(1);
    for (int k = 1; k < 2 * n_max; ++k) factorials_.push_back(factorials_.back() * k);
  }

  std::vector<Rational> run() {
    visit(0, 0);
    return sums_;
  }

 private:
  void visit(std::size_t index, int weight) {
    if (index == entries_.size()) {
      add_term(weight);
      return;
    }
    const int b = entries_[index].b;
    for (int k = 0; weight + k * b <= n_max_ - 1; ++k) {
      counts_[index] = k;
      visit(index + 1, weight + k * b);
    }
    counts_[index] = 0;
  }

  void add_term(int weight) {
    int total_a = 0;
    int total_n = 0;
    BigInt denominator = 1;
    Rational product = 1;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const int k = counts_[i];
      if (k == 0) continue;
      total_a += entries_[i].a * k;
      total_n += k;
      denominator *= factorials_[static_cast<std::size_t>(k)];
      product *= exact::pow(entries_[i].value, static_cast<unsigned long>(k));
    }
    // 1 + sum (a-1) n = 1 + total_a - total_n
    denominator *= factorials_[static_cast<std::size_t>(1 + total_a - total_n)];
    Rational term(factorials_[static_cast<std::size_t>(total_a)], denominator);
    term.canonicalize();
    sums_[static_cast<std::size_t>(weight)] += term * product;
  }

  std::vector<Entry> entries_;
  int n_max_;
  std::vector<int> counts_;
  std::vector<Rational> sums_;  // sums_[n - 1] = alpha_n
  std::vector<BigInt> factorials_;
};

// One pass u <- 1 + sum c_{a,b} s^b u^a on u = beta / s (order n_max - 1 in s).
// Working with u instead of beta keeps every term at full precision.
PowerSeries update(const std::vector<Entry>& entries, const PowerSeries& u) {
  const int order = u.order();
  auto next = PowerSeries::one(order);
  std::vector<PowerSeries> powers{PowerSeries::one(order)};
  for (const auto& e : entries) {
    if (e.b > order) continue;
    while (static_cast<int>(powers.size()) <= e.a) powers.push_back(powers.back() * u);
    const auto& ua = powers[static_cast<std::size_t>(e.a)];
    for (int m = e.b; m <= order; ++m) next[m] += e.value * ua[m - e.b];
  }
  return next;
}

}  // namespace

AlphaSeries alpha_via_lemma(const CTable& table, int n_max) {
  require_order(n_max);
  LemmaSum sum(usable_entries(table, n_max), n_max);
  return AlphaSeries{sum.run()};
}

PowerSeries iterate_beta(const CTable& table, int n_max, int passes) {
  require_order(n_max);
  const auto entries = usable_entries(table, n_max);
  auto u = PowerSeries::zero(n_max - 1);
  for (int i = 0; i < passes; ++i) u = update(entries, u);
  return u.shifted_up(1);
}

AlphaSeries alpha_via_iteration(const CTable& table, int n_max) {
  require_order(n_max);
  const auto entries = usable_entries(table, n_max);
  auto u = PowerSeries::zero(n_max - 1);
  // Each pass fixes at least one more coefficient, so n_max + 1 passes
  // always reach the fixed point.
  for (int pass = 0; pass <= n_max + 1; ++pass) {
    auto next = update(entries, u);
    if (next == u) {
      return AlphaSeries{std::vector<Rational>(u.coeffs().begin(), u.coeffs().end())};
    }
    u = std::move(next);
  }
  throw ConvergenceError("iteration did not reach a fixed point within n_max + 2 passes");
}

AlphaSeries alpha_via_lagrange(const CTable& table, int n_max) {
  require_order(n_max);
  const auto entries = usable_entries(table, n_max);
  // Terms with total s-degree n come from beta-orders k <= 2n - 1.
  const int order = 2 * n_max - 1;
  using LSeries = exact::Series<LaurentPoly>;
  auto phi = LSeries::one(order - 1);
  for (const auto& e : entries) {
    if (e.a <= order - 1) phi[e.a] += LaurentPoly::monomial(e.b - e.a, e.value);
  }
  const auto f = reciprocal(phi).shifted_up(1);  // beta / phi(beta)
  const auto g = exact::revert(f);

  std::vector<Rational> alpha(static_cast<std::size_t>(n_max), Rational(0));
  for (int k = 1; k <= g.order(); ++k) {
    for (const auto& [power, c] : g[k].terms()) {
      const int total = k + power;
      if (total <= 0) {
        throw ValidationFailure("Lagrange route: nonzero coefficient at total s-degree " + std::to_string(total) +
                                " (corrupted c-table?)");
      }
      if (total <= n_max) alpha[static_cast<std::size_t>(total - 1)] += c;
    }
  }
  return AlphaSeries{std::move(alpha)};
}

}  // namespace ddseries::reversion
