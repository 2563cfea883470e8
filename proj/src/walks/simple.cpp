#include "ddseries/walks/simple.hpp"

#include <algorithm>
#include <cmath>

#include "ddseries/error.hpp"

namespace ddseries::walks {

namespace {

constexpr std::size_t kMaxCells = 20'000'000;

}  // namespace

SimpleWalkCounts simple_walk_counts(int d, int m_max) {
  if (d < 1) throw PreconditionError("dimension d must be >= 1");
  if (m_max < 1) throw PreconditionError("m_max must be >= 1");
  const int k_max = 2 * m_max;
  const int side = 2 * k_max + 1;
  std::size_t cells = 1;
  for (int i = 0; i < d; ++i) {
    cells *= static_cast<std::size_t>(side);
    if (cells > kMaxCells) throw BudgetExceeded("simple walk grid too large for d = " + std::to_string(d));
  }
  std::vector<std::size_t> stride(static_cast<std::size_t>(d));
  std::size_t s = 1;
  for (int i = 0; i < d; ++i) {
    stride[static_cast<std::size_t>(i)] = s;
    s *= static_cast<std::size_t>(side);
  }
  std::size_t origin = 0;
  for (int i = 0; i < d; ++i) origin += static_cast<std::size_t>(k_max) * stride[static_cast<std::size_t>(i)];

  std::vector<BigInt> cur(cells), next(cells);
  cur[origin] = 1;
  SimpleWalkCounts out{d, m_max, {}, {}, {}};
  for (int k = 1; k <= k_max; ++k) {
    for (auto& v : next) v = 0;
    // Support after k-1 steps stays inside |x_i| <= k-1 < k_max, so neighbours never leave the grid.
    for (std::size_t c = 0; c < cells; ++c) {
      if (cur[c] == 0) continue;
      for (int i = 0; i < d; ++i) {
        next[c + stride[static_cast<std::size_t>(i)]] += cur[c];
        next[c - stride[static_cast<std::size_t>(i)]] += cur[c];
      }
    }
    std::swap(cur, next);
    if (k % 2 == 0) {
      out.returns[k] = cur[origin];
      out.sup_even[k] = *std::max_element(cur.begin(), cur.end());
    } else {
      out.to_neighbor[k] = cur[origin + stride[0]];
    }
  }
  return out;
}

SimpleBoundReport check_simple_walk_bounds(const SimpleWalkCounts& counts) {
  SimpleBoundReport report;
  report.d = counts.d;
  const BigInt two_d = 2 * counts.d;
  for (const auto& [k, ret] : counts.returns) {
    const int m = k / 2;
    SimpleBoundRow row;
    row.m = m;
    const auto odd = counts.to_neighbor.find(k - 1);
    row.identity = odd != counts.to_neighbor.end() && odd->second * two_d == ret;
    const auto sup = counts.sup_even.find(k);
    row.maximal = sup != counts.sup_even.end() && sup->second == ret;

    BigInt subspace_rhs;
    if (m <= counts.d) {
      subspace_rhs = exact::binomial(counts.d, m) * exact::pow(BigInt(2 * m), static_cast<unsigned long>(2 * m));
    } else {
      subspace_rhs = exact::pow(two_d, static_cast<unsigned long>(2 * m));
    }
    row.subspace = ret <= subspace_rhs;
    row.subspace_ratio = std::exp(exact::log_of(ret) - exact::log_of(subspace_rhs));

    const BigInt lhs = BigInt(2 * m) * ret;
    const BigInt rhs = exact::pow(BigInt(20), static_cast<unsigned long>(m)) *
                       exact::pow(two_d, static_cast<unsigned long>(m)) * exact::factorial(m);
    row.factorial = lhs <= rhs;
    row.factorial_ratio = std::exp(exact::log_of(lhs) - exact::log_of(rhs));

    report.passed = report.passed && row.identity && row.maximal && row.subspace && row.factorial;
    report.worst_subspace_ratio = std::max(report.worst_subspace_ratio, row.subspace_ratio);
    report.worst_factorial_ratio = std::max(report.worst_factorial_ratio, row.factorial_ratio);
    report.rows.push_back(row);
  }
  return report;
}

nlohmann::json to_json(const SimpleWalkCounts& counts) {
  auto returns = nlohmann::json::object();
  for (const auto& [k, v] : counts.returns) returns[std::to_string(k)] = v.get_str();
  auto neighbor = nlohmann::json::object();
  for (const auto& [k, v] : counts.to_neighbor) neighbor[std::to_string(k)] = v.get_str();
  return {{"d", counts.d}, {"m_max", counts.m_max}, {"returns", returns}, {"to_neighbor", neighbor}};
}

nlohmann::json to_json(const SimpleBoundReport& report) {
  auto rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"m", r.m},
                    {"identity", r.identity},
                    {"maximal", r.maximal},
                    {"subspace", r.subspace},
                    {"factorial", r.factorial},
                    {"subspace_ratio", r.subspace_ratio},
                    {"factorial_ratio", r.factorial_ratio}});
  }
  return {{"d", report.d},
          {"passed", report.passed},
          {"worst_subspace_ratio", report.worst_subspace_ratio},
          {"worst_factorial_ratio", report.worst_factorial_ratio},
          {"rows", rows}};
}

}  // namespace ddseries::walks
