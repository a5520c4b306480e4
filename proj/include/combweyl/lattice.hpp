#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "combweyl/domain.hpp"

namespace combweyl {

struct RectSpec {
  double a = 1.0;  // width
  double b = 1.0;  // height

  void validate() const;
};

enum class CountMethod { lattice, fd_inertia, dense_oracle, closed_form_fd };

std::string_view to_string(CountMethod method);

/// One evaluation of a counting function: #{eigenvalues <= lambda}.
struct SpectralCount {
  double lambda = 0.0;
  std::int64_t count = 0;
  CountMethod method = CountMethod::lattice;
  double tie_tol = 0.0;
};

/// Relative slack on every "<= lambda" comparison of the exact counts.
inline constexpr double kLatticeTieTol = 1e-9;
/// Relative nudge applied before flooring a mathematically integral value.
inline constexpr double kFloorGuard = 1e-12;

/// Dirichlet eigenvalues pi^2 (m^2/a^2 + n^2/b^2), m, n >= 1.
SpectralCount count_rect_dirichlet(const RectSpec& rect, double lambda);

/// Neumann eigenvalues, m, n >= 0 (the zero mode included).
SpectralCount count_rect_neumann(const RectSpec& rect, double lambda);

/// Dirichlet count of one tooth [0, 1/(2q)] x [0, h] as the floor sum
/// sum_{l=1}^{m} floor((q h / pi) sqrt(mu - 4 pi^2 l^2)), mu = lambda / q^2.
SpectralCount count_tooth(const DomainSpec& spec, double lambda);

inline constexpr std::size_t kEnumerationGuard = 1'000'000;

/// All Dirichlet eigenvalues <= lambda, sorted, with multiplicity.
/// Throws ResourceError past kEnumerationGuard eigenvalues.
std::vector<double> enumerate_rect_eigs(const RectSpec& rect, double lambda);

}  // namespace combweyl
