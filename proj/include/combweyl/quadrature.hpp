#pragma once

#include <array>
#include <cmath>
#include <utility>

namespace combweyl {

namespace detail {

// 7-point Gauss / 15-point Kronrod nodes and weights on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename Scalar, typename F>
std::pair<Scalar, Scalar> kronrod15(F& f, Scalar a, Scalar b) {
  const Scalar mid = (a + b) / 2;
  const Scalar half = (b - a) / 2;
  const Scalar fc = f(mid);
  Scalar kronrod = fc * Scalar(kKronrodWeights[7]);
  Scalar gauss = fc * Scalar(kGaussWeights[3]);
  for (int i = 0; i < 7; ++i) {
    const Scalar dx = half * Scalar(kKronrodNodes[i]);
    const Scalar pair = f(mid - dx) + f(mid + dx);
    kronrod += Scalar(kKronrodWeights[i]) * pair;
    if (i % 2 == 1) gauss += Scalar(kGaussWeights[i / 2]) * pair;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

template <typename Scalar, typename F>
Scalar adaptive(F& f, Scalar a, Scalar b, Scalar tol, int depth) {
  const auto [value, error] = kronrod15<Scalar>(f, a, b);
  if (error <= tol || depth <= 0) return value;
  const Scalar mid = (a + b) / 2;
  return adaptive<Scalar>(f, a, mid, tol / 2, depth - 1) +
         adaptive<Scalar>(f, mid, b, tol / 2, depth - 1);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod quadrature of a smooth integrand on [a, b].
/// Bisects until the G7/K15 error estimate of each piece is below its share
/// of abs_tol.
template <typename Scalar, typename F>
Scalar integrate(F&& f, Scalar a, Scalar b, Scalar abs_tol = Scalar(1e-10),
                 int max_depth = 40) {
  if (a == b) return Scalar(0);
  return detail::adaptive<Scalar>(f, a, b, abs_tol, max_depth);
}

}  // namespace combweyl
