#pragma once

#include <optional>
#include <span>
#include <vector>

namespace combweyl {

/// Euler-Maclaurin breakdown of c - c_weyl, with f(x) = sqrt(1 - 4 pi^2 x^2 / mu)
/// and m the mode cutoff.
struct EulerMaclaurinTerms {
  double endpoint = 0.0;  // f(m) / 2
  double tail = 0.0;      // integral of f over [m, sqrt(mu)/(2 pi)]
  double periodic = 0.0;  // integral of ({x} - 1/2) f'(x) over [0, m]
};

struct ConstantReport {
  double mu = 0.0;
  double h = 0.0;
  int cutoff_m = 0;
  double c = 0.0;
  double c_weyl = 0.0;
  double delta = 0.0;
  std::optional<EulerMaclaurinTerms> em_terms;

  /// delta reassembled from the Euler-Maclaurin terms; requires em_terms.
  [[nodiscard]] double delta_from_terms() const;
};

/// floor(sqrt(mu) / (2 pi)), taken on the floating value with no nudging.
int mode_cutoff(double mu);

/// Two-term Weyl constant (2 + h) mu / (8 pi) - h sqrt(mu) / (2 pi).
double weyl_constant(double mu, double h);

/// mu / (4 pi) + (h / pi) sqrt(mu) sum_{l=1}^{m} sqrt(1 - 4 pi^2 l^2 / mu).
double theorem_constant(double mu, double h);

/// Full report; em_terms is filled when mu >= 4 pi^2.
ConstantReport constant_report(double mu, double h);

/// Requires mu >= 4 pi^2 (PreconditionError otherwise).
ConstantReport em_decomposition(double mu, double h);

struct CrossoverPoint {
  double mu = 0.0;
  double delta = 0.0;
  int sign = 0;  // -1, 0 (|delta| <= 1e-12) or +1
};

inline constexpr double kSignZeroTol = 1e-12;

/// Descriptive sign table of c - c_weyl over a strictly increasing grid.
std::vector<CrossoverPoint> crossover_scan(std::span<const double> mu_grid, double h);

}  // namespace combweyl
