#include "combweyl/asymptotics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <set>
#include <thread>
#include <tuple>

#include "combweyl/domain.hpp"
#include "combweyl/dtn.hpp"
#include "combweyl/errors.hpp"
#include "combweyl/fdlap.hpp"
#include "combweyl/lattice.hpp"

namespace combweyl {

int min_refinement(double mu, double resolution) {
  if (!(mu > 0.0) || !(resolution > 0.0)) throw DomainError("min_refinement: arguments must be positive");
  return std::max(1, static_cast<int>(std::ceil(std::sqrt(mu) / (2.0 * resolution))));
}

SweepRecord run_point(double mu, double h, int q, int s) {
  SweepRecord rec;
  rec.mu = mu;
  rec.h = h;
  rec.q = q;
  rec.s = s;
  rec.lambda = mu * q * q;
  const auto start = std::chrono::steady_clock::now();
  try {
    const DomainSpec spec{q, h};
    const CombGrid grid = build_comb_grid(spec, s);
    rec.h_snapped = grid.h_snapped();
    const DiscreteOperator op = assemble_dirichlet_operator(grid);
    rec.n_fd = inertia_count(op, rec.lambda).count;
    rec.n_square = count_rect_dirichlet(RectSpec{1.0, 1.0}, rec.lambda).count;
    rec.n_teeth = static_cast<std::int64_t>(q) * count_tooth(spec, rec.lambda).count;
    rec.defect = rec.n_fd - rec.n_square - rec.n_teeth;
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  rec.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

unsigned sweep_threads_from_env() {
  if (const char* env = std::getenv("COMBWEYL_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRecord> run_sweep(const ExperimentConfig& config, unsigned threads) {
  config.validate(false);
  std::set<std::tuple<double, int, int>> points;
  for (const double mu : config.mu_list)
    for (const int q : config.q_list)
      for (const int s : config.s_list) points.emplace(mu, q, s);
  const std::vector<std::tuple<double, int, int>> tasks(points.begin(), points.end());

  std::vector<SweepRecord> records(tasks.size());
  if (threads == 0) threads = sweep_threads_from_env();
  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));

  // Largest grids first keeps the tail short; results land in fixed slots.
  std::vector<std::size_t> order(tasks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&tasks](std::size_t a, std::size_t b) {
    const auto cost = [](const auto& t) { return std::pow(std::get<1>(t) * std::get<2>(t), 3.0); };
    return cost(tasks[a]) > cost(tasks[b]);
  });

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < order.size();) {
      const auto& [mu, q, s] = tasks[order[k]];
      records[order[k]] = run_point(mu, config.h, q, s);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return records;
}

FitResult fit_counts(std::span<const int> q, std::span<const double> counts) {
  if (q.size() != counts.size()) throw DomainError("fit_counts: size mismatch");
  if (std::set<int>(q.begin(), q.end()).size() < 3)
    throw DomainError("fit_counts: need at least 3 distinct q values");
  const auto rows = static_cast<Eigen::Index>(q.size());
  Eigen::MatrixXd design(rows, 2);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double qi = q[static_cast<std::size_t>(i)];
    design(i, 0) = qi * qi;
    design(i, 1) = qi;
    rhs(i) = counts[static_cast<std::size_t>(i)];
  }
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(rhs);
  FitResult fit;
  fit.c_hat = coef(0);
  fit.beta_hat = coef(1);
  fit.residual_max = (design * coef - rhs).cwiseAbs().maxCoeff();
  fit.q_min = *std::min_element(q.begin(), q.end());
  fit.q_max = *std::max_element(q.begin(), q.end());
  return fit;
}

FitResult fit_constant(std::span<const SweepRecord> records) {
  if (records.empty()) throw DomainError("fit_constant: no records");
  const double mu = records.front().mu;
  const double h = records.front().h;
  int finest = 0;
  for (const SweepRecord& r : records) {
    if (r.mu != mu || r.h != h) throw DomainError("fit_constant: records mix (mu, h) values");
    if (r.ok()) finest = std::max(finest, r.s);
  }
  std::vector<int> q;
  std::vector<double> n;
  for (const SweepRecord& r : records) {
    if (!r.ok() || r.s != finest) continue;
    q.push_back(r.q);
    n.push_back(static_cast<double>(r.n_fd));
  }
  FitResult fit = fit_counts(q, n);
  fit.mu = mu;
  fit.h = h;
  fit.s = finest;
  return fit;
}

std::vector<DefectPoint> defect_series(std::span<const SweepRecord> records) {
  std::vector<DefectPoint> out;
  if (records.empty()) return out;
  const SweepRecord& head = records.front();
  for (const SweepRecord& r : records) {
    if (r.mu != head.mu || r.h != head.h || r.s != head.s)
      throw DomainError("defect_series: records must share (mu, h, s)");
    if (!r.ok()) continue;
    out.push_back({r.q, r.defect, defect_bound(r.q, r.h, r.lambda)});
  }
  return out;
}

}  // namespace combweyl
