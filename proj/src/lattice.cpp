#include "combweyl/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "combweyl/errors.hpp"

namespace combweyl {

void RectSpec::validate() const {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw DomainError("RectSpec: side lengths must be positive and finite");
}

std::string_view to_string(CountMethod method) {
  switch (method) {
    case CountMethod::lattice: return "lattice";
    case CountMethod::fd_inertia: return "fd_inertia";
    case CountMethod::dense_oracle: return "dense_oracle";
    case CountMethod::closed_form_fd: return "closed_form_fd";
  }
  return "unknown";
}

namespace {

// Number of n >= first with n^2 / b^2 <= r, r already in units of pi^2.
std::int64_t inner_count(double b, double r, int first) {
  if (r < 0.0) return 0;
  const auto top = static_cast<std::int64_t>(std::floor(b * std::sqrt(r)));
  return std::max<std::int64_t>(0, top - first + 1);
}

std::int64_t lattice_count(const RectSpec& rect, double lambda, int first) {
  rect.validate();
  if (!std::isfinite(lambda))
    throw DomainError("lattice count: lambda must be finite");
  if (lambda < 0.0) return 0;
  const double scaled = lambda * (1.0 + kLatticeTieTol) / (kPi * kPi);
  const auto m_max = static_cast<std::int64_t>(std::floor(rect.a * std::sqrt(scaled)));
  std::int64_t count = 0;
  for (std::int64_t m = first; m <= m_max; ++m) {
    const double md = static_cast<double>(m) / rect.a;
    count += inner_count(rect.b, scaled - md * md, first);
  }
  return count;
}

}  // namespace

SpectralCount count_rect_dirichlet(const RectSpec& rect, double lambda) {
  return {lambda, lattice_count(rect, lambda, 1), CountMethod::lattice, kLatticeTieTol};
}

SpectralCount count_rect_neumann(const RectSpec& rect, double lambda) {
  return {lambda, lattice_count(rect, lambda, 0), CountMethod::lattice, kLatticeTieTol};
}

SpectralCount count_tooth(const DomainSpec& spec, double lambda) {
  spec.validate();
  if (!std::isfinite(lambda)) throw DomainError("count_tooth: lambda must be finite");
  SpectralCount out{lambda, 0, CountMethod::lattice, kLatticeTieTol};
  if (lambda <= 0.0) return out;
  const double q = spec.q;
  const double mu = lambda * (1.0 + kLatticeTieTol) / (q * q);
  const int m = static_cast<int>(std::floor(std::sqrt(mu) / (2.0 * kPi)));
  for (int l = 1; l <= m; ++l) {
    const double rest = mu - kFourPiSq * l * l;
    if (rest <= 0.0) continue;
    const double k_max = q * spec.h / kPi * std::sqrt(rest);
    out.count += static_cast<std::int64_t>(std::floor(k_max * (1.0 + kFloorGuard)));
  }
  return out;
}

std::vector<double> enumerate_rect_eigs(const RectSpec& rect, double lambda) {
  rect.validate();
  std::vector<double> eigs;
  if (!(lambda > 0.0)) return eigs;
  const double limit = lambda * (1.0 + kLatticeTieTol);
  const double pi2 = kPi * kPi;
  for (std::int64_t m = 1;; ++m) {
    const double mx = static_cast<double>(m) / rect.a;
    if (pi2 * (mx * mx + 1.0 / (rect.b * rect.b)) > limit) break;
    for (std::int64_t n = 1;; ++n) {
      const double ny = static_cast<double>(n) / rect.b;
      const double value = pi2 * (mx * mx + ny * ny);
      if (value > limit) break;
      if (eigs.size() >= kEnumerationGuard)
        throw ResourceError("enumerate_rect_eigs: more than 1e6 eigenvalues below lambda");
      eigs.push_back(value);
    }
  }
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

}  // namespace combweyl
