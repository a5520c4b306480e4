#pragma once

#include <optional>

namespace combweyl {

/// Relative threshold on |sin(omega h)| below which a mode is a pole.
inline constexpr double kPoleTol = 1e-12;

/// Eigenvalue -v'(0)/v(0) of the tooth Dirichlet-to-Neumann map on the mode
/// sin(2 q k pi x), where v'' + (lambda - 4 pi^2 k^2 q^2) v = 0, v(h) = 0.
///
/// Returns std::nullopt when lambda is a Dirichlet eigenvalue of the tooth
/// for this mode (the map has a pole there).
std::optional<double> tooth_mode_eigenvalue(int k, int q, double h, double lambda);

/// Number of modes with nonpositive DtN eigenvalue. Only k up to the
/// propagation cutoff floor(sqrt(lambda/q^2)/(2 pi)) are evaluated; all
/// higher modes are positive. Throws ExcludedLambdaError on a pole.
int count_nonpositive_tooth(int q, double h, double lambda);

/// Neumann minus Dirichlet count of the unit square at lambda; bounds the
/// square's share of the interface defect.
long long square_mixed_gap(double lambda);

/// square_mixed_gap(lambda) + q * count_nonpositive_tooth(q, h, lambda).
long long defect_bound(int q, double h, double lambda);

}  // namespace combweyl
