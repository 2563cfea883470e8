#pragma once

// Truncated formal power series over an exact coefficient ring.
//
// A Series<T> of order N holds the coefficients of x^0..x^N and makes no
// claim about higher powers. Binary operations truncate to the smaller order
// of their operands, so precision is never invented.
//
// T must provide +, -, *, unary -, equality, and a RingTraits specialization
// (zero/one, unit inverse, scaling by a Rational).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ddseries/error.hpp"
#include "ddseries/exact/rational.hpp"

namespace ddseries::exact {

template <class T>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static std::optional<Rational> unit_inverse(const Rational& v) {
    if (sgn(v) == 0) return std::nullopt;
    return Rational(1 / v);
  }
  static Rational scale(const Rational& v, const Rational& k) { return v * k; }
};

template <class T>
class Series {
 public:
  using Traits = RingTraits<T>;

  // The zero series of order 0.
  Series() : coeffs_(1, Traits::zero()) {}

  explicit Series(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PreconditionError("a series needs at least one coefficient");
  }

  static Series zero(int order) { return Series(std::vector<T>(checked(order) + 1, Traits::zero())); }

  static Series constant(T value, int order) {
    auto s = zero(order);
    s.coeffs_[0] = std::move(value);
    return s;
  }

  static Series one(int order) { return constant(Traits::one(), order); }

  // The series x (or 0 at order 0).
  static Series variable(int order) {
    auto s = zero(order);
    if (order >= 1) s.coeffs_[1] = Traits::one();
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const T> coeffs() const { return coeffs_; }

  const T& operator[](std::size_t n) const { return coeffs_[n]; }
  T& operator[](std::size_t n) { return coeffs_[n]; }

  // Coefficient of x^n; throws if n exceeds the known order.
  const T& at(int n) const {
    if (n < 0 || n > order()) {
      throw PreconditionError("coefficient " + std::to_string(n) + " beyond series order " +
                              std::to_string(order()));
    }
    return coeffs_[static_cast<std::size_t>(n)];
  }

  Series truncated(int new_order) const {
    if (new_order > order()) {
      throw PreconditionError("cannot extend a series beyond its known order");
    }
    return Series(std::vector<T>(coeffs_.begin(), coeffs_.begin() + checked(new_order) + 1));
  }

  // Lowest power with a nonzero coefficient, or order()+1 for the zero series.
  int valuation() const {
    for (int n = 0; n <= order(); ++n) {
      if (!Traits::is_zero(coeffs_[static_cast<std::size_t>(n)])) return n;
    }
    return order() + 1;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

  friend Series operator+(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) out.push_back(a[i] + b[i]);
    return Series(std::move(out));
  }

  friend Series operator-(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) out.push_back(a[i] - b[i]);
    return Series(std::move(out));
  }

  friend Series operator-(const Series& a) {
    std::vector<T> out;
    out.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) out.push_back(-c);
    return Series(std::move(out));
  }

  // Cauchy product truncated at min order.
  friend Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<T> out(static_cast<std::size_t>(n) + 1, Traits::zero());
    for (int i = 0; i <= n; ++i) {
      if (Traits::is_zero(a[i])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (Traits::is_zero(b[j])) continue;
        out[i + j] += a[i] * b[j];
      }
    }
    return Series(std::move(out));
  }

  Series scaled(const Rational& k) const {
    std::vector<T> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(Traits::scale(c, k));
    return Series(std::move(out));
  }

  // Multiply by x^k; the order grows by k (the low coefficients are exact zeros).
  Series shifted_up(int k) const {
    std::vector<T> out(static_cast<std::size_t>(checked(k)), Traits::zero());
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Series(std::move(out));
  }

  // Divide by x^k; requires the k lowest coefficients to vanish.
  Series shifted_down(int k) const {
    if (k > order()) throw SeriesError("shift exceeds series order");
    for (int i = 0; i < k; ++i) {
      if (!Traits::is_zero(coeffs_[static_cast<std::size_t>(i)])) {
        throw SeriesError("cannot divide by x^" + std::to_string(k) + ": low coefficient is nonzero");
      }
    }
    return Series(std::vector<T>(coeffs_.begin() + k, coeffs_.end()));
  }

  Series derivative() const {
    if (order() == 0) return zero(0);
    std::vector<T> out;
    out.reserve(coeffs_.size() - 1);
    for (int n = 1; n <= order(); ++n) out.push_back(Traits::scale(coeffs_[n], Rational(n)));
    return Series(std::move(out));
  }

 private:
  static std::size_t checked(int order) {
    if (order < 0) throw PreconditionError("series order must be non-negative");
    return static_cast<std::size_t>(order);
  }

  std::vector<T> coeffs_;
};

using PowerSeries = Series<Rational>;

template <class T>
Series<T> power(const Series<T>& base, int exponent) {
  if (exponent < 0) throw PreconditionError("negative series power");
  auto result = Series<T>::one(base.order());
  auto square = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * square;
    exponent >>= 1;
    if (exponent > 0) square = square * square;
  }
  return result;
}

// 1/a. Throws SeriesError("non-invertible series") when a[0] is not a unit.
template <class T>
Series<T> reciprocal(const Series<T>& a) {
  using Traits = RingTraits<T>;
  const auto inv0 = Traits::unit_inverse(a[0]);
  if (!inv0) throw SeriesError("non-invertible series: constant term is not a unit");
  const int n = a.order();
  std::vector<T> out(static_cast<std::size_t>(n) + 1, Traits::zero());
  out[0] = *inv0;
  for (int m = 1; m <= n; ++m) {
    T acc = Traits::zero();
    for (int k = 1; k <= m; ++k) {
      if (!Traits::is_zero(a[k])) acc += a[k] * out[m - k];
    }
    out[m] = -(*inv0 * acc);
  }
  return Series<T>(std::move(out));
}

// outer(inner(x)). inner must have zero constant term; order is the minimum.
template <class T>
Series<T> compose(const Series<T>& outer, const Series<T>& inner) {
  using Traits = RingTraits<T>;
  if (!Traits::is_zero(inner[0])) {
    throw SeriesError("composition requires the inner series to have zero constant term");
  }
  const int n = std::min(outer.order(), inner.order());
  const auto in = inner.truncated(n);
  // Horner: terms of outer beyond n only reach x^{n+1} and up.
  auto acc = Series<T>::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * in;
    acc[0] += outer[k];
  }
  return acc;
}

// log(a) for a[0] == 1, via b_n = a_n - (1/n) sum_{k<n} k b_k a_{n-k}.
template <class T>
Series<T> logarithm(const Series<T>& a) {
  using Traits = RingTraits<T>;
  if (!(a[0] == Traits::one())) throw SeriesError("logarithm requires constant term 1");
  const int n = a.order();
  std::vector<T> out(static_cast<std::size_t>(n) + 1, Traits::zero());
  for (int m = 1; m <= n; ++m) {
    T acc = Traits::zero();
    for (int k = 1; k < m; ++k) {
      if (!Traits::is_zero(out[k]) && !Traits::is_zero(a[m - k])) {
        acc += Traits::scale(out[k] * a[m - k], Rational(k));
      }
    }
    out[m] = a[m] - Traits::scale(acc, Rational(1, m));
  }
  return Series<T>(std::move(out));
}

// exp(b) for b[0] == 0, via e_n = (1/n) sum_{k=1}^n k b_k e_{n-k}.
template <class T>
Series<T> exponential(const Series<T>& b) {
  using Traits = RingTraits<T>;
  if (!Traits::is_zero(b[0])) throw SeriesError("exponential requires zero constant term");
  const int n = b.order();
  std::vector<T> out(static_cast<std::size_t>(n) + 1, Traits::zero());
  out[0] = Traits::one();
  for (int m = 1; m <= n; ++m) {
    T acc = Traits::zero();
    for (int k = 1; k <= m; ++k) {
      if (!Traits::is_zero(b[k])) acc += Traits::scale(b[k] * out[m - k], Rational(k));
    }
    out[m] = Traits::scale(acc, Rational(1, m));
  }
  return Series<T>(std::move(out));
}

// [x^{0..degree}] of phi^k by the J.C.P. Miller recurrence
//   p_m = 1/(m phi_0) sum_{j=1}^m ((k+1) j - m) phi_j p_{m-j}.
template <class T>
std::vector<T> power_prefix(const Series<T>& phi, int k, int degree) {
  using Traits = RingTraits<T>;
  const auto inv0 = Traits::unit_inverse(phi[0]);
  if (!inv0) throw SeriesError("power recurrence needs a unit constant term");
  std::vector<T> p(static_cast<std::size_t>(degree) + 1, Traits::zero());
  T lead = Traits::one();
  for (int i = 0; i < k; ++i) lead = lead * phi[0];
  p[0] = lead;
  for (int m = 1; m <= degree; ++m) {
    T acc = Traits::zero();
    for (int j = 1; j <= std::min(m, phi.order()); ++j) {
      const long weight = static_cast<long>(k + 1) * j - m;
      if (weight == 0 || Traits::is_zero(phi[j])) continue;
      acc += Traits::scale(phi[j] * p[m - j], Rational(weight));
    }
    p[m] = Traits::scale(acc * *inv0, Rational(1, m));
  }
  return p;
}

// Compositional inverse by Lagrange-Buermann: writing f(x) = x / phi(x),
// the inverse is g(s) = sum_k (s^k / k) [x^{k-1}] phi(x)^k.
// Requires f[0] == 0 and f[1] a unit; f(g(s)) = s and g(f(x)) = x through
// the order of f.
template <class T>
Series<T> revert(const Series<T>& f) {
  using Traits = RingTraits<T>;
  if (f.order() < 1) throw SeriesError("reversion needs order >= 1");
  if (!Traits::is_zero(f[0])) throw SeriesError("reversion requires zero constant term");
  if (!Traits::unit_inverse(f[1])) throw SeriesError("reversion requires a unit linear term");
  const int n = f.order();
  const auto phi = reciprocal(f.shifted_down(1));  // order n-1
  std::vector<T> out(static_cast<std::size_t>(n) + 1, Traits::zero());
  for (int k = 1; k <= n; ++k) {
    const auto p = power_prefix(phi, k, k - 1);
    out[k] = Traits::scale(p[k - 1], Rational(1, k));
  }
  return Series<T>(std::move(out));
}

// Coefficient n divided by n!.
PowerSeries borel_transform(const PowerSeries& a);
// Coefficient n multiplied by n!.
PowerSeries inverse_borel(const PowerSeries& a);

// Sum of the coefficients times x^n, evaluated in double at the end of an
// exact Horner pass (x is converted to a Rational first).
double evaluate(const PowerSeries& a, double x);
Rational evaluate_exact(const PowerSeries& a, const Rational& x);

}  // namespace ddseries::exact
