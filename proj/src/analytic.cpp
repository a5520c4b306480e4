#include "combweyl/analytic.hpp"

#include <cmath>
#include <string>

#include "combweyl/domain.hpp"
#include "combweyl/errors.hpp"
#include "combweyl/quadrature.hpp"

namespace combweyl {

void DomainSpec::validate() const {
  if (q < 1) throw DomainError("DomainSpec: q must be >= 1, got " + std::to_string(q));
  if (!(h > 0.0) || !std::isfinite(h))
    throw DomainError("DomainSpec: h must be a positive finite number");
}

namespace {

void check_mu_h(double mu, double h, const char* who) {
  if (!(mu > 0.0) || !std::isfinite(mu))
    throw DomainError(std::string(who) + ": mu must be positive and finite");
  if (!(h >= 0.0) || !std::isfinite(h))
    throw DomainError(std::string(who) + ": h must be nonnegative and finite");
}

// sum_{l=1}^{m} sqrt(1 - 4 pi^2 l^2 / mu), Neumaier-compensated.
double mode_sum(double mu, int m) {
  double sum = 0.0;
  double carry = 0.0;
  for (int l = 1; l <= m; ++l) {
    const double term = std::sqrt(std::max(0.0, 1.0 - kFourPiSq * l * l / mu));
    const double t = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + carry;
}

// c - c_weyl = (h / (8 pi)) sqrt(mu) (8 S + 4 - sqrt(mu)), with 4 - sqrt(mu)
// rewritten as (16 - mu) / (4 + sqrt(mu)) so the root at mu = 16 is exact.
double direct_delta(double mu, double h, double sum) {
  const double root = std::sqrt(mu);
  return h / (8.0 * kPi) * root * (8.0 * sum + (16.0 - mu) / (4.0 + root));
}

}  // namespace

double ConstantReport::delta_from_terms() const {
  if (!em_terms) throw PreconditionError("delta_from_terms: no Euler-Maclaurin terms");
  return h / kPi * std::sqrt(mu) * (em_terms->endpoint - em_terms->tail + em_terms->periodic);
}

int mode_cutoff(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu))
    throw DomainError("mode_cutoff: mu must be positive and finite");
  return static_cast<int>(std::floor(std::sqrt(mu) / (2.0 * kPi)));
}

double weyl_constant(double mu, double h) {
  check_mu_h(mu, h, "weyl_constant");
  // Same bulk term as theorem_constant, so the two agree bitwise at mu = 16.
  return mu / (4.0 * kPi) + h * (mu / (8.0 * kPi) - std::sqrt(mu) / (2.0 * kPi));
}

double theorem_constant(double mu, double h) {
  check_mu_h(mu, h, "theorem_constant");
  const int m = mode_cutoff(mu);
  return mu / (4.0 * kPi) + h / kPi * std::sqrt(mu) * mode_sum(mu, m);
}

namespace {

EulerMaclaurinTerms em_terms_for(double mu, int m) {
  const double a = std::sqrt(mu) / (2.0 * kPi);
  const auto f = [mu](double x) { return std::sqrt(std::max(0.0, 1.0 - kFourPiSq * x * x / mu)); };

  EulerMaclaurinTerms terms;
  terms.endpoint = f(m) / 2.0;

  // Area under the quarter ellipse past m: a * int_{t}^{1} sqrt(1 - s^2) ds.
  const double t = std::min(1.0, m / a);
  terms.tail = a / 2.0 * (std::acos(t) - t * std::sqrt(std::max(0.0, 1.0 - t * t)));

  // On [l-1, l], substitute x = a sin(theta): f'(x) dx = -sin(theta) dtheta,
  // which stays bounded up to the vertical tangent at x = a.
  double periodic = 0.0;
  for (int l = 1; l <= m; ++l) {
    const double lo = std::asin(std::min(1.0, (l - 1) / a));
    const double hi = std::asin(std::min(1.0, l / a));
    const double shift = l - 1 + 0.5;
    periodic += integrate<double>(
        [a, shift](double theta) { return -(a * std::sin(theta) - shift) * std::sin(theta); }, lo,
        hi, 1e-12);
  }
  terms.periodic = periodic;
  return terms;
}

}  // namespace

ConstantReport constant_report(double mu, double h) {
  check_mu_h(mu, h, "constant_report");
  ConstantReport report;
  report.mu = mu;
  report.h = h;
  report.cutoff_m = mode_cutoff(mu);
  const double sum = mode_sum(mu, report.cutoff_m);
  report.c = mu / (4.0 * kPi) + h / kPi * std::sqrt(mu) * sum;
  report.c_weyl = weyl_constant(mu, h);
  report.delta = direct_delta(mu, h, sum);
  if (report.cutoff_m >= 1) report.em_terms = em_terms_for(mu, report.cutoff_m);
  return report;
}

ConstantReport em_decomposition(double mu, double h) {
  check_mu_h(mu, h, "em_decomposition");
  if (mu < kFourPiSq)
    throw PreconditionError("em_decomposition: requires mu >= 4 pi^2 (cutoff m >= 1)");
  return constant_report(mu, h);
}

std::vector<CrossoverPoint> crossover_scan(std::span<const double> mu_grid, double h) {
  if (mu_grid.empty()) throw DomainError("crossover_scan: empty mu grid");
  for (std::size_t i = 1; i < mu_grid.size(); ++i)
    if (!(mu_grid[i] > mu_grid[i - 1]))
      throw DomainError("crossover_scan: mu grid must be strictly increasing");

  std::vector<CrossoverPoint> out;
  out.reserve(mu_grid.size());
  for (const double mu : mu_grid) {
    const ConstantReport r = constant_report(mu, h);
    const int sign = std::abs(r.delta) <= kSignZeroTol ? 0 : (r.delta > 0.0 ? 1 : -1);
    out.push_back({mu, r.delta, sign});
  }
  return out;
}

}  // namespace combweyl
