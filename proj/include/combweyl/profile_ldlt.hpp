#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace combweyl {

/// Signature of a symmetric matrix read off the pivots of an LDL^T
/// factorization (Sylvester's law of inertia).
struct Inertia {
  std::int64_t negative = 0;
  std::int64_t positive = 0;
  double min_abs_pivot = 0.0;
  /// Set when a pivot fell below the breakdown threshold; counts are then
  /// incomplete and must not be used.
  bool breakdown = false;
};

/// Envelope (profile) LDL^T of A - shift * I in the given row ordering,
/// without pivoting. Only the signs of the pivots are kept: rows of L are
/// held in a ring buffer spanning the widest row envelope, so memory is
/// O(bandwidth^2) regardless of n.
template <typename Scalar>
class ProfileLdlt {
 public:
  using SparseMatrix = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;

  explicit ProfileLdlt(const SparseMatrix& a) : a_(a) {
    const Eigen::Index n = a_.rows();
    first_.resize(static_cast<std::size_t>(n));
    Eigen::Index width = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::Index first = i;
      for (typename SparseMatrix::InnerIterator it(a_, i); it; ++it)
        first = std::min(first, it.col());
      first_[static_cast<std::size_t>(i)] = first;
      width = std::max(width, i - first);
    }
    bandwidth_ = width;
  }

  [[nodiscard]] Eigen::Index bandwidth() const { return bandwidth_; }
  [[nodiscard]] Eigen::Index rows() const { return a_.rows(); }

  /// Streams the factorization of A - shift * I. Stops early, with
  /// breakdown set, as soon as |pivot| < pivot_floor.
  Inertia inertia(Scalar shift, Scalar pivot_floor) const {
    const Eigen::Index n = a_.rows();
    const Eigen::Index slots = bandwidth_ + 1;
    const Eigen::Index w = std::max<Eigen::Index>(bandwidth_, 1);
    // ring(r, :) holds L(j, first_j .. j-1) for row j with j % slots == r.
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> ring(slots, w);
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> pivots(slots);
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> scaled(w);  // L(i,k) * D(k)
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> row(w);

    Inertia out;
    out.min_abs_pivot = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::Index fi = first_[static_cast<std::size_t>(i)];
      const Eigen::Index len = i - fi;
      row.head(len).setZero();
      Scalar diag = -shift;
      for (typename SparseMatrix::InnerIterator it(a_, i); it; ++it) {
        if (it.col() < i) row(it.col() - fi) = it.value();
        else if (it.col() == i) diag += it.value();
      }
      for (Eigen::Index j = fi; j < i; ++j) {
        const Eigen::Index fj = first_[static_cast<std::size_t>(j)];
        const Eigen::Index k0 = std::max(fi, fj);
        const Eigen::Index overlap = j - k0;
        const Eigen::Index slot = j % slots;
        Scalar t = row(j - fi);
        if (overlap > 0)
          t -= ring.row(slot).segment(k0 - fj, overlap).dot(scaled.segment(k0 - fi, overlap));
        scaled(j - fi) = t;
        row(j - fi) = t / pivots(slot);
      }
      if (len > 0) diag -= row.head(len).dot(scaled.head(len));
      const double mag = static_cast<double>(std::abs(diag));
      out.min_abs_pivot = std::min(out.min_abs_pivot, mag);
      if (!(std::abs(diag) >= pivot_floor)) {
        out.breakdown = true;
        return out;
      }
      (diag < Scalar(0) ? out.negative : out.positive) += 1;
      const Eigen::Index slot = i % slots;
      pivots(slot) = diag;
      if (len > 0) ring.row(slot).head(len) = row.head(len);
    }
    if (n == 0) out.min_abs_pivot = 0.0;
    return out;
  }

 private:
  SparseMatrix a_;
  std::vector<Eigen::Index> first_;
  Eigen::Index bandwidth_ = 0;
};

}  // namespace combweyl
