#pragma once

#include <Eigen/Core>
#include <Eigen/Jacobi>
#include <algorithm>
#include <cmath>

namespace combweyl {

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
/// sorted ascending. Sweeps until the off-diagonal Frobenius norm is at most
/// rel_tol times the Frobenius norm of the input.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> jacobi_eigenvalues(
    const Eigen::MatrixBase<Derived>& input,
    typename Derived::Scalar rel_tol = typename Derived::Scalar(1e-12), int max_sweeps = 100) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  const Eigen::Index n = a.rows();
  const Scalar target = rel_tol * a.norm();

  const auto off_norm = [&a, n] {
    Scalar sum(0);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        if (i != j) sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
  };

  for (int sweep = 0; sweep < max_sweeps && off_norm() > target; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == Scalar(0)) continue;
        Eigen::JacobiRotation<Scalar> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        a(p, q) = a(q, p) = Scalar(0);
      }
    }
  }

  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eigs = a.diagonal();
  std::sort(eigs.data(), eigs.data() + n);
  return eigs;
}

}  // namespace combweyl
