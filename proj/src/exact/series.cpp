#include "ddseries/exact/series.hpp"

namespace ddseries::exact {

PowerSeries borel_transform(const PowerSeries& a) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(a.order()) + 1);
  BigInt fact = 1;
  for (int n = 0; n <= a.order(); ++n) {
    if (n > 0) fact *= n;
    out.push_back(Rational(a[n] / fact));
  }
  return PowerSeries(std::move(out));
}

PowerSeries inverse_borel(const PowerSeries& a) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(a.order()) + 1);
  BigInt fact = 1;
  for (int n = 0; n <= a.order(); ++n) {
    if (n > 0) fact *= n;
    out.push_back(Rational(a[n] * fact));
  }
  return PowerSeries(std::move(out));
}

Rational evaluate_exact(const PowerSeries& a, const Rational& x) {
  Rational acc = a[a.order()];
  for (int n = a.order() - 1; n >= 0; --n) acc = acc * x + a[n];
  return acc;
}

double evaluate(const PowerSeries& a, double x) { return to_double(evaluate_exact(a, Rational(x))); }

}  // namespace ddseries::exact
