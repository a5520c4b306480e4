#include "combweyl/selftest.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "combweyl/analytic.hpp"
#include "combweyl/dtn.hpp"
#include "combweyl/fdlap.hpp"
#include "combweyl/lattice.hpp"

namespace combweyl {

namespace {

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream out;
  out.precision(17);
  (out << ... << args);
  return out.str();
}

SelftestResult lattice_vs_enumeration(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> side(0.1, 3.0), lam(0.0, 500.0);
  for (int trial = 0; trial < 100; ++trial) {
    const RectSpec rect{side(rng), side(rng)};
    const double lambda = lam(rng);
    const auto fast = count_rect_dirichlet(rect, lambda).count;
    const auto slow = static_cast<std::int64_t>(enumerate_rect_eigs(rect, lambda).size());
    if (fast != slow)
      return {"lattice_vs_enumeration", false,
              cat("a=", rect.a, " b=", rect.b, " lambda=", lambda, ": ", fast, " vs ", slow)};
  }
  return {"lattice_vs_enumeration", true, "100 random rectangles"};
}

SelftestResult tooth_sum_vs_rect(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> qd(1, 20);
  std::uniform_real_distribution<double> hd(0.1, 4.0), lam(0.0, 1e4);
  for (int trial = 0; trial < 100; ++trial) {
    const DomainSpec spec{qd(rng), hd(rng)};
    const double lambda = lam(rng);
    const auto tooth = count_tooth(spec, lambda).count;
    const auto rect = count_rect_dirichlet(RectSpec{spec.tooth_width(), spec.h}, lambda).count;
    if (tooth != rect)
      return {"tooth_sum_vs_rect", false,
              cat("q=", spec.q, " h=", spec.h, " lambda=", lambda, ": ", tooth, " vs ", rect)};
  }
  return {"tooth_sum_vs_rect", true, "100 random teeth"};
}

SelftestResult dtn_positivity(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> qd(1, 10), extra(1, 5);
  std::uniform_real_distribution<double> hd(0.05, 4.0), mud(0.0, 2000.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int q = qd(rng);
    const double h = hd(rng);
    const double lambda = mud(rng) * q * q;
    const int k = static_cast<int>(std::floor(std::sqrt(lambda / (q * q)) / (2.0 * kPi))) + extra(rng);
    const auto rho = tooth_mode_eigenvalue(k, q, h, lambda);
    if (!rho || !(*rho > 0.0))
      return {"dtn_positivity", false, cat("k=", k, " q=", q, " h=", h, " lambda=", lambda)};
  }
  return {"dtn_positivity", true, "200 super-cutoff modes"};
}

SelftestResult inertia_vs_dense(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> qd(1, 3), sd(1, 3);
  std::uniform_real_distribution<double> hd(0.2, 1.5);
  for (int trial = 0; trial < 8; ++trial) {
    const CombGrid grid = build_comb_grid(DomainSpec{qd(rng), hd(rng)}, sd(rng));
    if (grid.size() > kDenseOracleMax) continue;
    const DiscreteOperator op = assemble_dirichlet_operator(grid);
    const Eigen::VectorXd eigs = dense_eig_oracle(op);
    std::uniform_real_distribution<double> lam(0.0, 1.1 * eigs(eigs.size() - 1));
    for (int j = 0; j < 4; ++j) {
      const double lambda = lam(rng);
      const auto fast = inertia_count(op, lambda).count;
      const auto dense = count_from_spectrum(eigs, lambda).count;
      if (fast != dense)
        return {"inertia_vs_dense", false, cat("n=", grid.size(), " lambda=", lambda, ": ", fast,
                                               " vs ", dense)};
    }
  }
  return {"inertia_vs_dense", true, "random comb grids"};
}

SelftestResult euler_maclaurin_identity() {
  for (const double mu : {50.0, 100.0, 400.0, 1000.0}) {
    for (const double h : {0.5, 1.0, 2.0}) {
      const ConstantReport r = em_decomposition(mu, h);
      const double gap = std::abs(r.delta_from_terms() - r.delta);
      if (gap > 1e-8) return {"euler_maclaurin_identity", false, cat("mu=", mu, " h=", h, " gap=", gap)};
    }
  }
  return {"euler_maclaurin_identity", true, "12 (mu, h) pairs within 1e-8"};
}

}  // namespace

std::vector<SelftestResult> run_selftest(unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<SelftestResult> out;
  out.push_back(lattice_vs_enumeration(rng));
  out.push_back(tooth_sum_vs_rect(rng));
  out.push_back(dtn_positivity(rng));
  out.push_back(inertia_vs_dense(rng));
  out.push_back(euler_maclaurin_identity());
  return out;
}

}  // namespace combweyl
