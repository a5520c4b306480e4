#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "combweyl/analytic.hpp"
#include "combweyl/domain.hpp"
#include "combweyl/errors.hpp"

using namespace combweyl;

namespace {

// Extended-precision evaluation straight from the defining formulas.
long double weyl_ld(long double mu, long double h) {
  const long double pi = std::acos(-1.0L);
  return (2 + h) * mu / (8 * pi) - h * std::sqrt(mu) / (2 * pi);
}

long double theorem_ld(long double mu, long double h) {
  const long double pi = std::acos(-1.0L);
  const int m = static_cast<int>(std::floor(std::sqrt(mu) / (2 * pi)));
  long double sum = 0;
  for (int l = 1; l <= m; ++l) sum += std::sqrt(1 - 4 * pi * pi * l * l / mu);
  return mu / (4 * pi) + h / pi * std::sqrt(mu) * sum;
}

// Periodic term integrated by parts on each unit interval:
// sum_l (f(l-1) + f(l)) / 2 - int_0^m f, with the integral in closed form.
long double periodic_by_parts(long double mu, int m) {
  const long double pi = std::acos(-1.0L);
  const long double a = std::sqrt(mu) / (2 * pi);
  const auto f = [&](long double x) { return std::sqrt(std::max(0.0L, 1 - x * x / (a * a))); };
  long double trap = 0;
  for (int l = 1; l <= m; ++l) trap += (f(l - 1) + f(l)) / 2;
  const long double t = std::min(1.0L, m / a);
  const long double area = a / 2 * (std::asin(t) + t * std::sqrt(1 - t * t));
  return trap - area;
}

}  // namespace

TEST_CASE("mode_cutoff") {
  CHECK(mode_cutoff(16.0) == 0);
  CHECK(mode_cutoff(100.0) == 1);
  CHECK(mode_cutoff(kFourPiSq) == 1);
  CHECK(mode_cutoff(1000.0) == 5);
  CHECK(mode_cutoff(std::nextafter(kFourPiSq, 0.0)) == 0);
  CHECK_THROWS_AS(mode_cutoff(0.0), DomainError);
  CHECK_THROWS_AS(mode_cutoff(-3.0), DomainError);
}

TEST_CASE("weyl_constant examples") {
  CHECK(weyl_constant(16.0, 1.0) == doctest::Approx(4.0 / kPi).epsilon(1e-14));
  CHECK(weyl_constant(100.0, 1.0) == doctest::Approx(10.345071300973197).epsilon(1e-14));
  CHECK(weyl_constant(37.0, 0.0) == doctest::Approx(37.0 / (4.0 * kPi)).epsilon(1e-15));
  CHECK_THROWS_AS(weyl_constant(10.0, -1.0), DomainError);
  CHECK_THROWS_AS(weyl_constant(-10.0, 1.0), DomainError);
}

TEST_CASE("theorem_constant examples") {
  CHECK(theorem_constant(16.0, 1.0) == doctest::Approx(4.0 / kPi).epsilon(1e-14));
  CHECK(theorem_constant(100.0, 1.0) == doctest::Approx(10.434058597897846).epsilon(1e-14));
  CHECK(theorem_constant(1000.0, 1.0) == doctest::Approx(114.02025447396061).epsilon(1e-14));
  CHECK(theorem_constant(500.0, 0.0) == doctest::Approx(500.0 / (4.0 * kPi)).epsilon(1e-15));
  CHECK_THROWS_AS(theorem_constant(10.0, -0.5), DomainError);
}

TEST_CASE("constants agree with extended-precision evaluation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mud(1.0, 5000.0), hd(0.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    const double mu = mud(rng), h = hd(rng);
    CHECK(theorem_constant(mu, h) == doctest::Approx(double(theorem_ld(mu, h))).epsilon(1e-13));
    CHECK(weyl_constant(mu, h) == doctest::Approx(double(weyl_ld(mu, h))).epsilon(1e-13));
  }
}

TEST_CASE("em_decomposition at mu = 100") {
  const ConstantReport r = em_decomposition(100.0, 1.0);
  REQUIRE(r.em_terms);
  CHECK(r.cutoff_m == 1);
  CHECK(r.em_terms->endpoint == doctest::Approx(0.38897809191406450).epsilon(1e-13));
  CHECK(r.em_terms->tail == doctest::Approx(0.32038058243966283).epsilon(1e-13));
  CHECK(r.em_terms->periodic == doctest::Approx(-0.040641325646272663).epsilon(1e-10));
  CHECK(r.delta == doctest::Approx(0.088987296924648742).epsilon(1e-13));
  CHECK(std::abs(r.delta_from_terms() - r.delta) <= 1e-8);
}

TEST_CASE("em_decomposition at mu = 1000 and at the threshold") {
  const ConstantReport r = em_decomposition(1000.0, 1.0);
  CHECK(r.cutoff_m == 5);
  CHECK(r.delta == doctest::Approx(-0.31303163451218886).epsilon(1e-13));
  CHECK(std::abs(r.delta_from_terms() - r.delta) <= 1e-8);

  const ConstantReport edge = em_decomposition(kFourPiSq, 1.0);
  REQUIRE(edge.em_terms);
  CHECK(edge.cutoff_m == 1);
  CHECK(edge.em_terms->endpoint == 0.0);
  CHECK(edge.em_terms->tail == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(edge.delta_from_terms() - edge.delta) <= 1e-8);

  CHECK_THROWS_AS(em_decomposition(16.0, 1.0), PreconditionError);
}

TEST_CASE("periodic integral matches the by-parts closed form") {
  for (const double mu : {kFourPiSq, 50.0, 100.0, 157.9, 400.0, 1000.0, 5000.0, 40000.0}) {
    const ConstantReport r = constant_report(mu, 1.0);
    REQUIRE(r.em_terms);
    CHECK(std::abs(r.em_terms->periodic - double(periodic_by_parts(mu, r.cutoff_m))) <= 1e-10);
  }
}

TEST_CASE("Euler-Maclaurin consistency grid") {
  for (const double mu : {50.0, 100.0, 400.0, 1000.0})
    for (const double h : {0.5, 1.0, 2.0}) {
      const ConstantReport r = em_decomposition(mu, h);
      CHECK(std::abs(r.delta_from_terms() - r.delta) <= 1e-8);
      CHECK(std::abs(r.delta - (r.c - r.c_weyl)) <= 1e-12 * r.c);
    }
}

TEST_CASE("delta below the first threshold is exact algebra") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> mud(0.0, kFourPiSq), hd(0.0, 4.0);
  for (int i = 0; i < 100; ++i) {
    const double mu = std::max(mud(rng), 1e-9), h = std::max(hd(rng), 1e-9);
    const long double pi = std::acos(-1.0L);
    const long double root = std::sqrt(static_cast<long double>(mu));
    const long double expect = h / (8 * pi) * (4 * root - mu);
    const double got = constant_report(mu, h).delta;
    CHECK(std::abs(got - double(expect)) <= 1e-12 * std::abs(double(expect)));
  }
  for (const double h : {0.25, 1.0, 3.0}) CHECK(constant_report(16.0, h).delta == 0.0);
}

TEST_CASE("crossover_scan") {
  const std::vector<double> grid{4.0, 16.0, 36.0};
  const auto scan = crossover_scan(grid, 1.0);
  REQUIRE(scan.size() == 3);
  CHECK(scan[0].sign == 1);
  CHECK(scan[1].sign == 0);
  CHECK(scan[2].sign == -1);

  const std::vector<double> hundred{100.0}, thousand{1000.0};
  CHECK(crossover_scan(hundred, 1.0)[0].sign == 1);
  CHECK(crossover_scan(thousand, 1.0)[0].sign == -1);

  CHECK_THROWS_AS(crossover_scan(std::vector<double>{}, 1.0), DomainError);
  CHECK_THROWS_AS(crossover_scan(std::vector<double>{5.0, 5.0}, 1.0), DomainError);
}

TEST_CASE("c is continuous across mode thresholds") {
  for (int l = 1; l <= 3; ++l) {
    const double mu = kFourPiSq * l * l;
    for (const double eps : {1e-6, 1e-8}) {
      const double jump = std::abs(theorem_constant(mu + eps, 1.0) - theorem_constant(mu - eps, 1.0));
      CHECK(jump <= 10.0 * std::sqrt(eps));
    }
  }
}

TEST_CASE("both constants increase in mu") {
  double last_c = -1.0, last_w = -1.0;
  for (double mu = 4.0; mu <= 3000.0; mu *= 1.05) {
    const double c = theorem_constant(mu, 1.0), w = weyl_constant(mu, 1.0);
    CHECK(c > last_c);
    CHECK(w > last_w);
    last_c = c;
    last_w = w;
  }
}

TEST_CASE("teeth parts scale linearly in h") {
  for (const double mu : {10.0, 100.0, 777.0}) {
    const double bulk = mu / (4.0 * kPi);
    const double c1 = theorem_constant(mu, 1.0) - bulk;
    const double w1 = weyl_constant(mu, 1.0) - bulk;
    for (const double h : {0.5, 2.0, 3.5}) {
      CHECK(theorem_constant(mu, h) - bulk == doctest::Approx(h * c1).epsilon(1e-12));
      CHECK(weyl_constant(mu, h) - bulk == doctest::Approx(h * w1).epsilon(1e-12));
    }
  }
}

TEST_CASE("DomainSpec geometry") {
  const DomainSpec spec{5, 2.0};
  CHECK(spec.area() == 2.0);
  CHECK(spec.circumference() == 24.0);
  CHECK_THROWS_AS((DomainSpec{0, 1.0}.validate()), DomainError);
  CHECK_THROWS_AS((DomainSpec{1, 0.0}.validate()), DomainError);
}
