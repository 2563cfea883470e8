#include <doctest.h>

#include <cmath>

#include "ddseries/error.hpp"
#include "ddseries/exact/series.hpp"
#include "ddseries/resummation/borel.hpp"
#include "ddseries/resummation/source.hpp"

using namespace ddseries;
using namespace ddseries::resummation;
using exact::make_rational;

namespace {

// int_0^infinity e^{-t} log(1 + t) dt by composite Simpson on [0, 60].
double alternating_oracle() {
  const int n = 600000;
  const double h = 60.0 / n;
  double sum = 0;
  for (int i = 0; i <= n; ++i) {
    const double t = i * h;
    const double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
    sum += w * std::exp(-t) * std::log1p(t);
  }
  return sum * h / 3;
}

}  // namespace

TEST_CASE("geometric toy") {
  const auto src = geometric_source(40);
  for (double s : {0.1, 0.25, 0.5}) {
    const auto r = borel_sum(src, s, 20, 20, 1e-13);
    CAPTURE(s);
    CHECK(std::abs(r.value - s / (1 - s)) <= 1e-10);
    CHECK(r.error_estimate < 1e-10);
    CHECK(r.used_n == 20);
  }
}

TEST_CASE("raising the Pade order does not worsen the geometric toy") {
  const auto src = geometric_source(40);
  double previous = INFINITY;
  for (int m = 4; m <= 20; m += 2) {
    const double err = std::abs(borel_sum(src, 0.5, m, m, 1e-13).value - 1.0);
    CAPTURE(m);
    CHECK(err <= previous + 1e-14);
    previous = err;
  }
}

TEST_CASE("alternating factorial toy") {
  const double oracle = alternating_oracle();
  CHECK(oracle == doctest::Approx(std::exp(1.0) * -std::expint(-1.0)).epsilon(1e-12));
  const auto r = borel_sum(alternating_factorial_source(32), 1.0, 16, 16, 1e-13);
  CHECK(std::abs(r.value - oracle) <= 1e-8);
  CHECK(r.value == doctest::Approx(0.596347).epsilon(1e-6));
}

TEST_CASE("default Pade orders") {
  const auto r = borel_sum(alternating_factorial_source(9), 1.0);
  CHECK(r.pade_m == 4);
  CHECK(r.pade_n == 4);
  CHECK_THROWS_AS(borel_sum(geometric_source(6), 0.5, 4, 4), PreconditionError);
  CHECK_THROWS_AS(borel_sum(geometric_source(6), -1.0), PreconditionError);
}

TEST_CASE("pole on the contour is reported") {
  // 1/(1 - t) as [0/1]
  const std::vector<exact::Rational> c = {1, 1};
  const auto approx = exact::pade(c, 0, 1);
  const auto pole = find_positive_pole(approx, 10);
  REQUIRE(pole.has_value());
  CHECK(*pole == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(laplace_rational(approx, 0.5, 1e-10), PoleError);
  // the published SAW coefficients: every low-order approximant has a real positive pole
  try {
    (void)borel_sum(saw_published_source(), 0.1);
    FAIL("expected a pole");
  } catch (const PoleError& e) {
    CHECK(e.location() == doctest::Approx(1.2679).epsilon(1e-3));
  }
}

TEST_CASE("float Borel transform matches the exact one") {
  const auto src = alternating_factorial_source(25);
  const auto exact_b = exact::borel_transform(exact::PowerSeries(src.series()));
  std::vector<double> floats;
  for (const auto& q : src.series()) floats.push_back(exact::to_double(q));
  const auto float_b = borel_transform_float(floats);
  for (std::size_t n = 0; n < float_b.size(); ++n) {
    CHECK(std::abs(float_b[n] - exact::to_double(exact_b[static_cast<int>(n)])) <= 1e-15);
  }
}

TEST_CASE("partial sums") {
  const auto p = partial_sums(saw_published_source(), 0.1);
  REQUIRE(p.size() == 6);
  CHECK(p[0] == doctest::Approx(0.1));
  CHECK(p[1] == doctest::Approx(0.11));
  CHECK(p[2] == doctest::Approx(0.112));
  CHECK(p[3] == doctest::Approx(0.1126));
  CHECK(partial_sums(CoefficientSource{}, 0.3).empty());
  const auto g = partial_sums(geometric_source(3), 0.5);
  CHECK(g == std::vector<double>{0.5, 0.75, 0.875});
}

TEST_CASE("published coefficients and the mu series are mutual reciprocals") {
  const exact::PowerSeries mu(saw_published_mu_series());
  const auto beta = exact::reciprocal(mu);
  const auto src = saw_published_source();
  for (int n = 0; n < 6; ++n) CHECK(beta[n] == src.entries[static_cast<std::size_t>(n)].value);
}

TEST_CASE("source validation") {
  const auto ok = validate_source(saw_published_source());
  CHECK(ok.passed);
  CHECK(ok.signs == std::vector<int>{1, 1, 1, 1, 1, 1});

  auto wrong = saw_published_source();
  wrong.entries[4].value = 28;
  const auto bad = validate_source(wrong);
  CHECK_FALSE(bad.passed);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].find("alpha_5") != std::string::npos);

  auto external = saw_published_source();
  for (int n = 7; n <= 13; ++n) external.entries.push_back({n, n < 12 ? 1000 : -1000, Provenance::ExternalFile});
  CHECK(validate_source(external).passed);
  external.entries[11].value = 5;
  const auto sign = validate_source(external);
  CHECK_FALSE(sign.passed);
  CHECK(sign.violations.at(0).find("alpha_12") != std::string::npos);

  const auto catalan = validate_source(catalan_source(8));
  CHECK(catalan.passed);
  CHECK_FALSE(catalan.notes.empty());
  CHECK(catalan_source(6).entries[5].value == 42);
}

TEST_CASE("coefficient file round trip") {
  auto src = saw_published_source();
  src.entries.push_back({7, make_rational(-3, 2), Provenance::ExternalFile});
  const auto back = source_from_json(to_json(src), "memory");
  REQUIRE(back.size() == 7);
  CHECK(back.entries[6].value == make_rational(-3, 2));
  CHECK(back.entries[6].tag == Provenance::ExternalFile);
  auto gap = to_json(src);
  gap.erase(2);
  CHECK_THROWS_AS(source_from_json(gap, "gap"), PreconditionError);
  CHECK_THROWS_AS(source_from_json(nlohmann::json::object(), "obj"), PreconditionError);
  auto bad_tag = to_json(src);
  bad_tag[0]["tag"] = "rumour";
  CHECK_THROWS_AS(source_from_json(bad_tag, "tag"), PreconditionError);
}
