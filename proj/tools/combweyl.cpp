// Command-line front end: constants, exact and FD counts, tooth DtN modes,
// config-driven sweeps and the built-in oracle self-test.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "combweyl/analytic.hpp"
#include "combweyl/asymptotics.hpp"
#include "combweyl/config.hpp"
#include "combweyl/dtn.hpp"
#include "combweyl/fdlap.hpp"
#include "combweyl/lattice.hpp"
#include "combweyl/report.hpp"
#include "combweyl/selftest.hpp"

namespace {

using combweyl::format_double;

void print(const std::string& key, const std::string& value) {
  std::cout << key << " = " << value << '\n';
}

int cmd_constants(double mu, double h) {
  const combweyl::ConstantReport r = combweyl::constant_report(mu, h);
  print("mu", format_double(r.mu));
  print("h", format_double(r.h));
  print("cutoff_m", std::to_string(r.cutoff_m));
  print("c", format_double(r.c));
  print("c_weyl", format_double(r.c_weyl));
  print("delta", format_double(r.delta));
  if (r.em_terms) {
    print("em_endpoint", format_double(r.em_terms->endpoint));
    print("em_tail", format_double(r.em_terms->tail));
    print("em_periodic", format_double(r.em_terms->periodic));
    print("delta_em", format_double(r.delta_from_terms()));
  }
  return 0;
}

int cmd_count_rect(double a, double b, double lambda, bool neumann) {
  const combweyl::RectSpec rect{a, b};
  const auto count = neumann ? combweyl::count_rect_neumann(rect, lambda)
                             : combweyl::count_rect_dirichlet(rect, lambda);
  std::cout << count.count << '\n';
  return 0;
}

int cmd_count_comb(int q, double mu, double h, int refine) {
  const combweyl::CombGrid grid = combweyl::build_comb_grid(combweyl::DomainSpec{q, h}, refine);
  if (grid.degenerate_teeth())
    std::cerr << "warning: teeth carry no grid unknowns at this refinement\n";
  const combweyl::DiscreteOperator op = combweyl::assemble_dirichlet_operator(grid);
  const double lambda = mu * q * q;
  const auto count = combweyl::inertia_count(op, lambda);
  std::cerr << "# lambda=" << format_double(lambda) << " n=" << grid.size()
            << " delta=" << format_double(grid.delta())
            << " h_snapped=" << format_double(grid.h_snapped())
            << " bandwidth=" << op.bandwidth << '\n';
  std::cout << count.count << '\n';
  return 0;
}

int cmd_dtn(int q, double h, double lambda, std::optional<int> k) {
  if (k) {
    const auto rho = combweyl::tooth_mode_eigenvalue(*k, q, h, lambda);
    print("rho", rho ? format_double(*rho) : std::string("pole"));
    return 0;
  }
  const int cutoff =
      static_cast<int>(std::floor(std::sqrt(lambda / (double(q) * q)) / (2.0 * combweyl::kPi)));
  print("cutoff", std::to_string(std::max(cutoff, 0)));
  for (int mode = 1; mode <= cutoff; ++mode) {
    const auto rho = combweyl::tooth_mode_eigenvalue(mode, q, h, lambda);
    print("rho[" + std::to_string(mode) + "]", rho ? format_double(*rho) : std::string("pole"));
  }
  print("n_nonpositive", std::to_string(combweyl::count_nonpositive_tooth(q, h, lambda)));
  print("square_mixed_gap", std::to_string(combweyl::square_mixed_gap(lambda)));
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out) {
  combweyl::ExperimentConfig config = combweyl::load_config(config_path);
  config.validate(true);
  if (!out.empty()) config.out_path = out;
  if (config.out_path.empty())
    throw combweyl::ConfigError("out_path", "no output path (use --out or out_path)");
  auto records = combweyl::run_sweep(config);
  const combweyl::SweepReport report = combweyl::build_report(config, std::move(records));
  for (const auto& path : combweyl::write_report(report, config.out_path))
    std::cout << "wrote " << path.string() << '\n';
  int failed = 0;
  for (const auto& r : report.records)
    if (!r.ok()) ++failed;
  if (failed) std::cerr << failed << " record(s) carry an error marker\n";
  return 0;
}

int cmd_selftest() {
  bool all = true;
  for (const auto& result : combweyl::run_selftest()) {
    std::cout << (result.passed ? "PASS " : "FAIL ") << result.name << ": " << result.detail << '\n';
    all = all && result.passed;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalue counting on comb domains"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help");

  double mu = 0.0, h = 1.0, a = 1.0, b = 1.0, lambda = 0.0;
  int q = 1, refine = 1, k = 0;
  bool neumann = false;
  std::string config_path, out_path;

  auto* constants = app.add_subcommand("constants", "c(mu), c_weyl(mu), delta and Euler-Maclaurin terms");
  constants->add_option("--mu", mu)->required();
  constants->add_option("--h", h)->required();

  auto* count = app.add_subcommand("count", "eigenvalue counts");
  count->require_subcommand(1);
  auto* rect = count->add_subcommand("rect", "exact rectangle count");
  rect->add_option("--a", a)->required();
  rect->add_option("--b", b)->required();
  rect->add_option("--lambda", lambda)->required();
  rect->add_flag("--neumann", neumann);
  auto* comb = count->add_subcommand("comb", "finite-difference inertia count at lambda = mu q^2");
  comb->add_option("--q", q)->required();
  comb->add_option("--mu", mu)->required();
  comb->add_option("--h", h)->required();
  comb->add_option("--refine", refine)->required();

  auto* dtn = app.add_subcommand("dtn", "tooth Dirichlet-to-Neumann modes");
  dtn->add_option("--q", q)->required();
  dtn->add_option("--h", h)->required();
  dtn->add_option("--lambda", lambda)->required();
  auto* k_opt = dtn->add_option("--k", k);

  auto* sweep = app.add_subcommand("sweep", "config-driven asymptotics sweep");
  sweep->add_option("--config", config_path)->required();
  sweep->add_option("--out", out_path, "output stem; writes <out>.csv and <out>.json");

  auto* selftest = app.add_subcommand("selftest", "run the oracle cross-checks");

  for (CLI::App* sub : {constants, count, rect, comb, dtn, sweep, selftest})
    sub->set_help_flag("--help", "print this help");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return 2;
  }

  try {
    if (*constants) return cmd_constants(mu, h);
    if (*rect) return cmd_count_rect(a, b, lambda, neumann);
    if (*comb) return cmd_count_comb(q, mu, h, refine);
    if (*dtn) return cmd_dtn(q, h, lambda, *k_opt ? std::optional<int>(k) : std::nullopt);
    if (*sweep) return cmd_sweep(config_path, out_path);
    if (*selftest) return cmd_selftest();
  } catch (const combweyl::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
