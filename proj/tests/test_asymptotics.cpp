#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "combweyl/analytic.hpp"
#include "combweyl/asymptotics.hpp"
#include "combweyl/errors.hpp"
#include "combweyl/lattice.hpp"

using namespace combweyl;

namespace {

SweepRecord synthetic(int q, double n) {
  SweepRecord r;
  r.mu = 1.0;
  r.h = 1.0;
  r.q = q;
  r.s = 1;
  r.n_fd = static_cast<std::int64_t>(n);
  return r;
}

bool same_except_time(const SweepRecord& a, const SweepRecord& b) {
  return a.mu == b.mu && a.h == b.h && a.q == b.q && a.s == b.s && a.lambda == b.lambda &&
         a.n_fd == b.n_fd && a.n_square == b.n_square && a.n_teeth == b.n_teeth &&
         a.defect == b.defect && a.h_snapped == b.h_snapped && a.error == b.error;
}

}  // namespace

TEST_CASE("min_refinement") {
  CHECK(min_refinement(100.0) == 15);
  CHECK(std::sqrt(100.0) / (2.0 * min_refinement(100.0)) <= 0.35);
  CHECK(std::sqrt(100.0) / (2.0 * (min_refinement(100.0) - 1)) > 0.35);
  CHECK(min_refinement(0.01) == 1);
}

TEST_CASE("run_sweep on a small config") {
  ExperimentConfig config{{100.0}, 1.0, {3, 2}, {4}, ""};
  const auto records = run_sweep(config, 2);
  REQUIRE(records.size() == 2);
  CHECK(records[0].q == 2);
  CHECK(records[1].q == 3);
  for (const SweepRecord& r : records) {
    CHECK(r.ok());
    CHECK(r.lambda == 100.0 * r.q * r.q);
    CHECK(r.defect == r.n_fd - r.n_square - r.n_teeth);
    CHECK(r.defect >= 0);
    CHECK(r.n_square == count_rect_dirichlet({1, 1}, r.lambda).count);
    CHECK(r.h_snapped == 1.0);
    CHECK(r.wall_time_s >= 0.0);
  }
}

TEST_CASE("run_sweep with an empty q list is empty") {
  ExperimentConfig config{{100.0}, 1.0, {}, {4}, ""};
  CHECK(run_sweep(config, 1).empty());
}

TEST_CASE("n_fd settles under refinement") {
  ExperimentConfig config{{100.0}, 1.0, {2}, {8, 2, 4}, ""};
  const auto r = run_sweep(config, 1);
  REQUIRE(r.size() == 3);
  CHECK(r[0].s == 2);
  CHECK(r[1].s == 4);
  CHECK(r[2].s == 8);
  CHECK(std::abs(r[2].n_fd - r[1].n_fd) <= std::abs(r[1].n_fd - r[0].n_fd));
}

TEST_CASE("errors become record markers") {
  const SweepRecord bad = run_point(100.0, 1.0, 64, 40);  // over the q * s guard
  CHECK_FALSE(bad.ok());
  CHECK(bad.error.find("guard") != std::string::npos);
  CHECK(bad.lambda == 100.0 * 64 * 64);
}

TEST_CASE("sweeps are deterministic and schedule independent") {
  ExperimentConfig config{{60.0, 100.0}, 0.8, {1, 2, 3}, {3, 5}, ""};
  const auto serial = run_sweep(config, 1);
  const auto parallel = run_sweep(config, 4);
  REQUIRE(serial.size() == 12);
  REQUIRE(parallel.size() == serial.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(same_except_time(serial[i], parallel[i]));
  for (std::size_t i = 1; i < serial.size(); ++i) {
    const auto key = [](const SweepRecord& r) { return std::tuple(r.mu, r.q, r.s); };
    CHECK(key(serial[i - 1]) < key(serial[i]));
  }
}

TEST_CASE("fit_constant on exact model data") {
  std::vector<SweepRecord> records;
  for (int q = 2; q <= 6; ++q) records.push_back(synthetic(q, 10.0 * q * q + 3.0 * q));
  const FitResult fit = fit_constant(records);
  CHECK(fit.c_hat == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(fit.beta_hat == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.residual_max <= 1e-10);
  CHECK(fit.q_min == 2);
  CHECK(fit.q_max == 6);
}

TEST_CASE("fit_constant with a constant offset") {
  std::vector<SweepRecord> records;
  for (int q = 2; q <= 6; ++q) records.push_back(synthetic(q, 10.0 * q * q + 3.0 * q + 1.0));
  const FitResult fit = fit_constant(records);
  // Normal equations for q = 2..6 give c = 785/79, beta = 279/79.
  CHECK(fit.c_hat == doctest::Approx(785.0 / 79.0).epsilon(1e-12));
  CHECK(fit.beta_hat == doctest::Approx(279.0 / 79.0).epsilon(1e-12));
  CHECK(std::abs(fit.c_hat - 10.0) <= 0.25);
  CHECK(fit.residual_max <= 1.0);
  CHECK(fit.residual_max == doctest::Approx(15.0 / 79.0).epsilon(1e-10));
}

TEST_CASE("fit_constant uses the finest refinement and needs three q") {
  std::vector<SweepRecord> records;
  for (int q = 2; q <= 4; ++q) {
    records.push_back(synthetic(q, 1e6));
    SweepRecord fine = synthetic(q, 5.0 * q * q);
    fine.s = 2;
    records.push_back(fine);
  }
  CHECK(fit_constant(records).c_hat == doctest::Approx(5.0));
  CHECK(fit_constant(records).s == 2);

  std::vector<SweepRecord> two{synthetic(2, 4), synthetic(3, 9), synthetic(3, 9)};
  CHECK_THROWS_AS(fit_constant(two), DomainError);
  records[0].mu = 2.0;
  CHECK_THROWS_AS(fit_constant(records), DomainError);
}

TEST_CASE("defect_series") {
  ExperimentConfig config{{100.0}, 1.0, {2}, {4}, ""};
  const auto records = run_sweep(config, 1);
  const auto series = defect_series(records);
  REQUIRE(series.size() == 1);
  CHECK(series[0].q == 2);
  CHECK(series[0].defect == records[0].defect);
  CHECK(series[0].bound >= 0);

  // Below every eigenvalue of the pieces all counts vanish.
  const SweepRecord low = run_point(1.0, 1.0, 1, 2);
  REQUIRE(low.ok());
  CHECK(low.n_fd == 0);
  CHECK(low.defect == 0);

  std::vector<SweepRecord> mixed{records[0], records[0]};
  mixed[1].s = 8;
  CHECK_THROWS_AS(defect_series(mixed), DomainError);
}

TEST_CASE("COMBWEYL_THREADS caps the pool") {
  ::setenv("COMBWEYL_THREADS", "3", 1);
  CHECK(sweep_threads_from_env() == 3);
  ::setenv("COMBWEYL_THREADS", "zero", 1);
  CHECK(sweep_threads_from_env() >= 1);
  ::unsetenv("COMBWEYL_THREADS");
  CHECK(sweep_threads_from_env() >= 1);
}
