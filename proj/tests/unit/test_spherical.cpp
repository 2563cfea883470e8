#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ddseries/error.hpp"
#include "ddseries/numeric/bessel.hpp"
#include "ddseries/numeric/quadrature.hpp"
#include "ddseries/spherical/kc.hpp"
#include "ddseries/spherical/series.hpp"

using namespace ddseries;
using exact::make_rational;
using exact::Rational;

namespace {

// (1/pi) int_0^pi e^{x (cos t - 1)} cos(nu t) dt by the trapezoid rule, which
// is spectrally accurate for this periodic integrand.
double scaled_bessel_by_trapezoid(int nu, double x) {
  const int m = 2000;
  double sum = 0;
  for (int i = 0; i <= m; ++i) {
    const double t = std::numbers::pi * i / m;
    const double w = (i == 0 || i == m) ? 0.5 : 1.0;
    sum += w * std::exp(x * (std::cos(t) - 1)) * std::cos(nu * t);
  }
  return sum / m;
}

struct GaussLegendre {
  std::vector<double> x, w;  // on [-1, 1]
};

GaussLegendre gauss_legendre(int n) {
  GaussLegendre g;
  for (int i = 1; i <= n; ++i) {
    double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    g.x.push_back(z);
    g.w.push_back(2 / ((1 - z * z) * dp * dp));
  }
  return g;
}

// 1/2 (2 pi)^{-3} int_{[-pi,pi]^3} dk / (3 - sum cos k_i). The k_3 integral is
// done in closed form, leaving (1/pi^2) int int 1/sqrt(a^2 - 1) over [0, pi]^2
// with a = 3 - cos k_1 - cos k_2, taken in polar coordinates about the origin.
double watson_oracle() {
  const auto g = gauss_legendre(96);
  const double theta_max = std::numbers::pi / 4;
  double total = 0;
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    const double theta = 0.5 * theta_max * (g.x[i] + 1);
    const double r_max = std::numbers::pi / std::cos(theta);
    double inner = 0;
    for (std::size_t j = 0; j < g.x.size(); ++j) {
      const double r = 0.5 * r_max * (g.x[j] + 1);
      const double a = 3 - std::cos(r * std::cos(theta)) - std::cos(r * std::sin(theta));
      inner += g.w[j] * r / std::sqrt(a * a - 1);
    }
    total += g.w[i] * 0.5 * r_max * inner;
  }
  total *= 0.5 * theta_max;
  return 0.5 * 2 * total / (std::numbers::pi * std::numbers::pi);  // two triangles, then the factor 1/2
}

}  // namespace

TEST_CASE("adaptive quadrature on closed forms") {
  for (int k = 0; k <= 8; ++k) {
    const auto r = numeric::integrate([k](double x) { return std::pow(x, k); }, 0, 1, 1e-14, 1e-14);
    CHECK(r.value == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
  }
  CHECK(numeric::integrate([](double x) { return std::sin(x); }, 0, std::numbers::pi, 1e-14, 1e-14).value ==
        doctest::Approx(2.0).epsilon(1e-13));
  const auto log_r = numeric::integrate([](double x) { return std::log(x); }, 0, 1, 1e-12, 1e-12);
  CHECK(log_r.converged);
  CHECK(log_r.value == doctest::Approx(-1.0).epsilon(1e-11));
  CHECK(numeric::integrate([](double x) { return std::exp(-x); }, 0, 50, 1e-14, 1e-14).value ==
        doctest::Approx(1 - std::exp(-50.0)).epsilon(1e-13));
}

TEST_CASE("scaled Bessel functions against the integral representation") {
  for (double x : {0.0, 0.1, 1.0, 5.0, 12.0, 19.9, 20.0, 20.5, 30.0, 60.0}) {
    CAPTURE(x);
    CHECK(numeric::i0_scaled(x) == doctest::Approx(scaled_bessel_by_trapezoid(0, x)).epsilon(1e-13));
    CHECK(numeric::i1_scaled(x) == doctest::Approx(scaled_bessel_by_trapezoid(1, x)).epsilon(1e-13));
  }
  // series and asymptotic branches agree across the switch
  for (double x : {18.0, 20.0, 22.0, 26.0}) {
    CHECK(numeric::i0_scaled_series(x) == doctest::Approx(numeric::i0_scaled_asymptotic(x)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(numeric::i0_scaled(-1), PreconditionError);
}

TEST_CASE("g and g' in floating point") {
  CHECK(numeric::g_spherical(0) == 0);
  CHECK(numeric::g_spherical(1e-4) == doctest::Approx(1e-4 - 0.25e-8).epsilon(1e-14));
  for (double x : {0.3, 2.0, 15.0, 25.0, 400.0}) {
    const double h = 1e-5 * std::max(1.0, x);
    const double fd = (numeric::g_spherical(x + h) - numeric::g_spherical(x - h)) / (2 * h);
    CHECK(numeric::g_spherical_prime(x) == doctest::Approx(fd).epsilon(1e-7));
    CHECK(numeric::g_spherical(x) == doctest::Approx(-std::log(scaled_bessel_by_trapezoid(0, x))).epsilon(1e-13));
  }
  for (double x : {1e4, 1e8, 1e15, 1e25}) {
    const double expected = 1 / (2 * x) + 1 / (8 * x * x) + 1 / (8 * x * x * x);
    CHECK(numeric::g_spherical_prime(x) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("I0 series coefficients") {
  const auto i0 = spherical::i0_series(8);
  CHECK(i0[0] == 1);
  CHECK(i0[1] == 0);
  CHECK(i0[2] == make_rational(1, 4));
  CHECK(i0[4] == make_rational(1, 64));
  CHECK(i0[6] == make_rational(1, 2304));
  // x = 1: series through x^8 vs the integral, tail below (1/4)^5 / (5!)^2
  const double value = exact::evaluate(i0, 1.0);
  CHECK(std::abs(value - std::exp(1.0) * scaled_bessel_by_trapezoid(0, 1.0)) < 1e-7);
  CHECK(value == doctest::Approx(1.26607).epsilon(1e-5));
}

TEST_CASE("g series and its inverse") {
  const auto g = spherical::g_series(10);
  CHECK(g[0] == 0);
  CHECK(g[1] == 1);
  CHECK(g[2] == make_rational(-1, 4));
  CHECK(g[3] == 0);
  CHECK(g[4] == make_rational(1, 64));
  for (int k = 3; k <= 10; k += 2) CHECK(g[k] == 0);
  const auto a = spherical::a_coefficients(30);
  CHECK(a[1] == 1);
  CHECK(a[2] == make_rational(1, 4));
  CHECK(a[3] == make_rational(1, 8));
  const auto series = spherical::spherical_series(40);
  const auto id = exact::compose(series.g, series.g_inverse);
  CHECK(id == exact::PowerSeries::variable(40));
  CHECK(exact::compose(series.g_inverse, series.g) == exact::PowerSeries::variable(40));
}

TEST_CASE("sign runs") {
  const auto runs = spherical::sign_runs(spherical::a_coefficients(60));
  CHECK_FALSE(runs.zero_at.has_value());
  const auto lengths = runs.lengths();
  REQUIRE(lengths.size() >= 4);
  CHECK(runs.runs[0] == std::pair{1, 12});
  CHECK(runs.runs[1] == std::pair{-1, 8});
  CHECK(lengths[2] == 9);
  CHECK(lengths[3] == 9);
  for (std::size_t i = 1; i < runs.runs.size(); ++i) CHECK(runs.runs[i].first == -runs.runs[i - 1].first);

  const std::vector<Rational> with_zero = {0, 1, 2, -1, 0, 5};
  const auto cut = spherical::sign_runs(with_zero);
  REQUIRE(cut.zero_at.has_value());
  CHECK(*cut.zero_at == 4);
  CHECK(cut.lengths() == std::vector<int>{2, 1});
}

TEST_CASE("K_c(3) against the lattice Green function") {
  const double oracle = watson_oracle();
  CHECK(oracle == doctest::Approx(0.2527310098586).epsilon(1e-9));
  const auto kc = spherical::kc_direct(3);
  CHECK(std::abs(kc.value - oracle) < 1e-6);
  CHECK(kc.error < 1e-10);
}

TEST_CASE("K_c direct quadrature properties") {
  CHECK_THROWS_AS(spherical::kc_direct(2), PreconditionError);
  CHECK(spherical::kc_direct(5).value < spherical::kc_direct(3).value);
  for (int d : {100, 400}) {
    // 2d K_c(d) = 1 + a_2 2!/d + ...
    CHECK(2 * d * spherical::kc_direct(d).value == doctest::Approx(1 + 0.5 / d).epsilon(2.0 / (d * d)));
  }
  // tail expansion vs brute quadrature on a finite piece
  const auto tail60 = spherical::kc_tail(4, 60);
  const auto tail90 = spherical::kc_tail(4, 90);
  const auto piece = numeric::integrate([](double x) { return std::pow(numeric::i0_scaled(x), 4); }, 60, 90, 1e-15,
                                        1e-13);
  CHECK(tail60.value - tail90.value == doctest::Approx(piece.value).epsilon(1e-11));
}

TEST_CASE("g inverse by root finding") {
  for (double x : {1e-3, 0.5, 3.0, 19.0, 21.0, 1e3, 1e8, 1e20}) {
    const double t = numeric::g_spherical(x);
    CHECK(spherical::g_inverse(t) == doctest::Approx(x).epsilon(1e-12));
  }
  CHECK(spherical::g_inverse(0) == 0);
  CHECK(spherical::g_inverse_prime(1e-8) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("Borel inverse-function route equals the direct integral") {
  for (int d : {3, 5, 10}) {
    const double direct = spherical::kc_direct(d).value;
    const double borel = spherical::kc_borel_inverse_function(d).value;
    CAPTURE(d);
    CHECK(std::abs(direct - borel) / direct <= 1e-8);
  }
}

TEST_CASE("Borel-Pade route") {
  // Recorded behaviour: [6/6] for (g^{-1})' has a pole on the positive axis.
  try {
    (void)spherical::kc_borel_pade(5, 6, 6);
    FAIL("expected a pole");
  } catch (const PoleError& e) {
    CHECK(e.location() > 0);
    CHECK(e.location() == doctest::Approx(1.9676).epsilon(1e-3));
  }
  const auto p = spherical::kc_borel_pade(5, 4, 4);
  const double direct = spherical::kc_direct(5).value;
  CHECK(std::abs(p.result.value - direct) < 1e-3);
  CHECK(std::abs(p.result.value - direct) > 1e-6);  // achieved: about 3e-4
}

TEST_CASE("asymptotic partial sums") {
  const auto a = spherical::a_coefficients(80);
  const auto p10 = spherical::kc_asymptotic(10, a);
  CHECK(p10.front() == doctest::Approx(0.05).epsilon(1e-15));
  const auto report = spherical::optimal_truncation(10, a, spherical::kc_direct(10).value);
  CHECK(report.best_error <= 1e-2);
  CHECK(report.best_error < 1e-3 * report.errors.front());
  CHECK(report.u_shaped);
  const auto p3 = spherical::kc_asymptotic(3, a);
  CHECK(std::abs(p3.back()) > 1e6);
}
