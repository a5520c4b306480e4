#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "combweyl/config.hpp"

namespace combweyl {

/// One (mu, q, s) point of a sweep. Counts are meaningless when error is set.
struct SweepRecord {
  double mu = 0.0;
  double h = 0.0;
  int q = 0;
  int s = 0;
  double lambda = 0.0;        // mu * q^2
  std::int64_t n_fd = 0;      // FD inertia count on the comb
  std::int64_t n_square = 0;  // exact N_Q(lambda)
  std::int64_t n_teeth = 0;   // q * N_T(lambda)
  std::int64_t defect = 0;    // n_fd - n_square - n_teeth
  double h_snapped = 0.0;
  double wall_time_s = 0.0;
  std::string error;

  [[nodiscard]] bool ok() const { return error.empty(); }
};

/// Least-squares fit of N(q) = c q^2 + beta q.
struct FitResult {
  double mu = 0.0;
  double h = 0.0;
  int s = 0;
  double c_hat = 0.0;
  double beta_hat = 0.0;
  double residual_max = 0.0;
  int q_min = 0;
  int q_max = 0;
};

struct DefectPoint {
  int q = 0;
  std::int64_t defect = 0;
  std::int64_t bound = 0;
};

/// Smallest refinement s with delta * q * sqrt(mu) <= resolution, i.e.
/// sqrt(mu) / (2 s) <= resolution.
int min_refinement(double mu, double resolution = 0.35);

/// Computes a single record; failures land in record.error.
SweepRecord run_point(double mu, double h, int q, int s);

/// Parallelism cap from COMBWEYL_THREADS, else the hardware concurrency.
unsigned sweep_threads_from_env();

/// One record per (mu, q, s), sorted by (mu, q, s). threads = 0 means
/// sweep_threads_from_env().
std::vector<SweepRecord> run_sweep(const ExperimentConfig& config, unsigned threads = 0);

FitResult fit_counts(std::span<const int> q, std::span<const double> counts);

/// Fits the records of one (mu, h) at their finest s. Needs at least three
/// distinct q among the successful records.
FitResult fit_constant(std::span<const SweepRecord> records);

/// Pairs each measured defect with defect_bound(q, h, mu q^2). Records must
/// share (mu, h, s).
std::vector<DefectPoint> defect_series(std::span<const SweepRecord> records);

}  // namespace combweyl
