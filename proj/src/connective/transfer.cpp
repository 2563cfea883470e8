#include "ddseries/connective/transfer.hpp"

#include <cmath>
#include <map>

#include "ddseries/error.hpp"

namespace ddseries::connective {

namespace {

constexpr double kTolerance = 1e-12;
constexpr int kMaxIterations = 100000;
constexpr std::size_t kMaxCharacteristicStates = 40;

std::vector<int> canonical(const std::vector<int>& steps) {
  std::map<int, int> relabel;  // axis -> (new axis, flip)
  std::vector<int> out;
  out.reserve(steps.size());
  std::map<int, bool> flip;
  for (int step : steps) {
    const int axis = step >> 1;
    if (!relabel.count(axis)) {
      relabel[axis] = static_cast<int>(relabel.size());
      flip[axis] = (step & 1) != 0;
    }
    out.push_back(2 * relabel[axis] + ((step & 1) ^ (flip[axis] ? 1 : 0)));
  }
  return out;
}

int axes_used(const std::vector<int>& steps) {
  int top = -1;
  for (int s : steps) top = std::max(top, s >> 1);
  return top + 1;
}

// Sites visited by a step sequence from the origin, origin included.
std::vector<std::vector<int>> sites(const std::vector<int>& steps, int d) {
  std::vector<std::vector<int>> out(1, std::vector<int>(static_cast<std::size_t>(d), 0));
  for (int s : steps) {
    auto next = out.back();
    next[static_cast<std::size_t>(s >> 1)] += (s & 1) ? -1 : 1;
    out.push_back(std::move(next));
  }
  return out;
}

bool all_distinct(const std::vector<std::vector<int>>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) return false;
  return true;
}

BigInt orbit(int d, int used) {
  BigInt size = 1;
  for (int j = 0; j < used; ++j) size *= 2 * d - 2 * j;
  return size;
}

}  // namespace

TransferSystem build_transfer(int d, int tau) {
  if (d < 1) throw PreconditionError("dimension d must be >= 1");
  if (tau < 2 || tau > 8) throw PreconditionError("transfer system supports 2 <= tau <= 8");
  TransferSystem sys;
  sys.d = d;
  sys.tau = tau;
  const int width = tau - 1;
  // Canonical suffixes: every window of tau sites is pairwise distinct, so a
  // valid shape of tau - 1 steps is a self-avoiding walk of that length.
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 0; len < width; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : frontier) {
      const int used = axes_used(prefix);
      for (int dir = 0; dir < 2 * std::min(d, used + 1); ++dir) {
        if ((dir >> 1) == used && (dir & 1)) continue;  // a new axis starts positive
        auto cand = prefix;
        cand.push_back(dir);
        if (all_distinct(sites(cand, d))) next.push_back(std::move(cand));
      }
    }
    frontier = std::move(next);
  }
  sys.states = frontier;
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < sys.states.size(); ++i) index[sys.states[i]] = i;
  sys.matrix.assign(sys.states.size(), std::vector<long>(sys.states.size(), 0));
  for (std::size_t i = 0; i < sys.states.size(); ++i) {
    const auto& state = sys.states[i];
    sys.initial.push_back(orbit(d, axes_used(state)));
    for (int dir = 0; dir < 2 * d; ++dir) {
      auto extended = state;
      extended.push_back(dir);
      if (!all_distinct(sites(extended, d))) continue;  // the new site meets one of the last tau sites
      const std::vector<int> suffix(extended.begin() + 1, extended.end());
      ++sys.matrix[i][index.at(canonical(suffix))];
    }
  }
  return sys;
}

std::vector<BigInt> transfer_counts(const TransferSystem& sys, int n_max) {
  std::vector<BigInt> out;
  const int width = sys.tau - 1;
  // Short walks (n < tau - 1) are self-avoiding; count them from the state prefixes.
  for (int n = 1; n <= std::min(n_max, width - 1); ++n) {
    std::map<std::vector<int>, BigInt> seen;
    for (std::size_t i = 0; i < sys.states.size(); ++i) {
      const std::vector<int> prefix(sys.states[i].begin(), sys.states[i].begin() + n);
      seen.emplace(prefix, orbit(sys.d, axes_used(prefix)));
    }
    BigInt total = 0;
    for (const auto& [prefix, size] : seen) total += size;
    out.push_back(total);
  }
  std::vector<BigInt> w = sys.initial;
  for (int n = width; n <= n_max; ++n) {
    if (n > width) {
      std::vector<BigInt> next(w.size(), 0);
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j)
          if (sys.matrix[i][j] != 0) next[j] += w[i] * sys.matrix[i][j];
      }
      w = std::move(next);
    }
    if (n >= 1) {
      BigInt total = 0;
      for (const auto& v : w) total += v;
      out.push_back(total);
    }
  }
  return out;
}

namespace {

// Faddeev-LeVerrier: det(x I - M) = sum c_k x^k with exact integers.
std::vector<BigInt> characteristic_polynomial(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  std::vector<std::vector<BigInt>> mk(n, std::vector<BigInt>(n, 0));  // M_k, with M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = M (M_{k-1} + c_{n-k+1} I)
    std::vector<std::vector<BigInt>> inner = mk;
    for (std::size_t i = 0; i < n; ++i) inner[i][i] += c[n - k + 1];
    std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (m[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += inner[l][j] * m[i][l];
      }
    mk = std::move(next);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += mk[i][i];
    c[n - k] = -trace / static_cast<long>(k);  // exact division
  }
  return c;
}

}  // namespace

TransferResult mu_tau_transfer(int d, int tau) {
  const auto sys = build_transfer(d, tau);
  const std::size_t n = sys.states.size();
  TransferResult out;
  out.d = d;
  out.tau = tau;
  out.states = static_cast<int>(n);
  // Row vector iteration x <- x M, 1-norm normalised; the norm ratio tends to the Perron root.
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  double lambda = 0;
  for (int it = 1; it <= kMaxIterations; ++it) {
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) y[j] += x[i] * static_cast<double>(sys.matrix[i][j]);
    double norm = 0;
    for (double v : y) norm += v;
    for (auto& v : y) v /= norm;
    const double change = std::abs(norm - lambda) / norm;
    lambda = norm;
    x = std::move(y);
    out.iterations = it;
    out.residual = change;
    if (it % 100 == 0) out.trace.push_back(lambda);
    if (it > 1 && change <= kTolerance) {
      // Confirm with a second consecutive step inside tolerance.
      double next = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) next += x[i] * static_cast<double>(sys.matrix[i][j]);
      if (std::abs(next - lambda) / next <= kTolerance) break;
    }
    if (it == kMaxIterations) {
      out.trace.push_back(lambda);
      throw ConvergenceError("power iteration for tau = " + std::to_string(tau) + ", d = " + std::to_string(d) +
                             " stalled at " + std::to_string(lambda) + " (relative change " +
                             std::to_string(change) + ")");
    }
  }
  out.eigenvalue = lambda;
  if (n <= kMaxCharacteristicStates) out.characteristic = characteristic_polynomial(sys.matrix);
  return out;
}

nlohmann::json to_json(const TransferResult& r) {
  auto poly = nlohmann::json::array();
  for (const auto& c : r.characteristic) poly.push_back(c.get_str());
  return {{"d", r.d},
          {"tau", r.tau},
          {"states", r.states},
          {"eigenvalue", r.eigenvalue},
          {"residual", r.residual},
          {"iterations", r.iterations},
          {"trace", r.trace},
          {"characteristic_polynomial", poly}};
}

}  // namespace ddseries::connective
