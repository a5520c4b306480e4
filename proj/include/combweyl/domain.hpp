#pragma once

#include <numbers>

namespace combweyl {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kFourPiSq = 4.0 * kPi * kPi;

/// Comb domain: the unit square with q teeth [0, 1/(2q)] x [0, h] attached
/// along its top edge at x = (j-1)/q, j = 1..q.
struct DomainSpec {
  int q = 1;
  double h = 1.0;

  /// Throws DomainError unless q >= 1 and h > 0.
  void validate() const;

  [[nodiscard]] double area() const { return 1.0 + h / 2.0; }
  [[nodiscard]] double circumference() const { return 2.0 * h * q + 4.0; }
  [[nodiscard]] double tooth_width() const { return 1.0 / (2.0 * q); }
};

}  // namespace combweyl
