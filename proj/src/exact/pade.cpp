#include "ddseries/exact/pade.hpp"

#include <optional>
#include <string>

#include "ddseries/error.hpp"

namespace ddseries::exact {

namespace {

// Solves A q = rhs over the rationals; nullopt if A is singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || sgn(a[row][col]) == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      rhs[row] -= factor * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= a[i][i];
  return rhs;
}

}  // namespace

double PadeApproximant::evaluate(double x) const {
  double p = 0.0;
  for (auto it = numerator.rbegin(); it != numerator.rend(); ++it) p = p * x + to_double(*it);
  double q = 0.0;
  for (auto it = denominator.rbegin(); it != denominator.rend(); ++it) q = q * x + to_double(*it);
  return p / q;
}

PadeApproximant pade(std::span<const Rational> coeffs, int m, int n) {
  if (m < 0 || n < 0) throw PreconditionError("Pade orders must be non-negative");
  if (coeffs.size() < static_cast<std::size_t>(m + n + 1)) {
    throw PreconditionError("Pade [" + std::to_string(m) + "/" + std::to_string(n) + "] needs " +
                            std::to_string(m + n + 1) + " coefficients, got " +
                            std::to_string(coeffs.size()));
  }
  auto c = [&](int i) { return i < 0 ? Rational(0) : coeffs[static_cast<std::size_t>(i)]; };

  PadeApproximant out;
  out.requested_m = m;
  out.requested_n = n;
  for (int used = n; used >= 0; --used) {
    std::vector<Rational> q{Rational(1)};
    if (used > 0) {
      // sum_{j=0}^{used} q_j c_{k-j} = 0 for k = m+1 .. m+used
      std::vector<std::vector<Rational>> a(static_cast<std::size_t>(used),
                                           std::vector<Rational>(static_cast<std::size_t>(used)));
      std::vector<Rational> rhs(static_cast<std::size_t>(used));
      for (int row = 0; row < used; ++row) {
        const int k = m + 1 + row;
        for (int j = 1; j <= used; ++j) a[row][j - 1] = c(k - j);
        rhs[row] = -c(k);
      }
      auto sol = solve(std::move(a), std::move(rhs));
      if (!sol) continue;
      q.insert(q.end(), sol->begin(), sol->end());
    }
    std::vector<Rational> p(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
      Rational acc = 0;
      for (int j = 0; j <= std::min(k, used); ++j) acc += q[j] * c(k - j);
      p[k] = acc;
    }
    out.numerator = std::move(p);
    out.denominator = std::move(q);
    out.used_n = used;
    return out;
  }
  throw ConvergenceError("Pade construction failed");  // unreachable: used = 0 always solves
}

}  // namespace ddseries::exact
