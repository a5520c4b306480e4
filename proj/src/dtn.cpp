#include "combweyl/dtn.hpp"

#include <cmath>
#include <sstream>

#include "combweyl/domain.hpp"
#include "combweyl/errors.hpp"
#include "combweyl/lattice.hpp"

namespace combweyl {

namespace {

void check_mode_args(int k, int q, double h, double lambda) {
  if (k < 1 || q < 1) throw DomainError("tooth mode: k and q must be >= 1");
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("tooth mode: h must be positive");
  if (!std::isfinite(lambda)) throw DomainError("tooth mode: lambda must be finite");
}

}  // namespace

std::optional<double> tooth_mode_eigenvalue(int k, int q, double h, double lambda) {
  check_mode_args(k, q, h, lambda);
  const double kq = static_cast<double>(k) * q;
  const double s = lambda - kFourPiSq * kq * kq;
  if (s > 0.0) {
    const double omega = std::sqrt(s);
    const double sine = std::sin(omega * h);
    if (std::abs(sine) < kPoleTol * std::max(1.0, omega * h)) return std::nullopt;
    return omega * std::cos(omega * h) / sine;
  }
  if (s < 0.0) {
    const double kappa = std::sqrt(-s);
    return kappa / std::tanh(kappa * h);
  }
  return 1.0 / h;
}

int count_nonpositive_tooth(int q, double h, double lambda) {
  check_mode_args(1, q, h, lambda);
  if (lambda <= 0.0) return 0;
  const double mu = lambda / (static_cast<double>(q) * q);
  const int cutoff = static_cast<int>(std::floor(std::sqrt(mu) / (2.0 * kPi)));
  int count = 0;
  for (int k = 1; k <= cutoff; ++k) {
    const auto rho = tooth_mode_eigenvalue(k, q, h, lambda);
    if (!rho) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "count_nonpositive_tooth: lambda = " << lambda
          << " is a tooth Dirichlet eigenvalue (mode k = " << k << ")";
      throw ExcludedLambdaError(msg.str());
    }
    if (*rho <= 0.0) ++count;
  }
  return count;
}

long long square_mixed_gap(double lambda) {
  const RectSpec unit{1.0, 1.0};
  return count_rect_neumann(unit, lambda).count - count_rect_dirichlet(unit, lambda).count;
}

long long defect_bound(int q, double h, double lambda) {
  return square_mixed_gap(lambda) +
         static_cast<long long>(q) * count_nonpositive_tooth(q, h, lambda);
}

}  // namespace combweyl
