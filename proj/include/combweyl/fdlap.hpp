#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <optional>
#include <vector>

#include "combweyl/domain.hpp"
#include "combweyl/lattice.hpp"

namespace combweyl {

/// Integer grid coordinates: the point (i * delta, j * delta).
struct GridNode {
  int i = 0;
  int j = 0;
  friend bool operator==(const GridNode&, const GridNode&) = default;
};

inline constexpr int kMaxTeethTimesRefine = 2048;

/// Uniform grid of spacing delta = 1/(2 q s) on the comb. Interior nodes are
/// numbered row by row, bottom-up, x increasing within a row: the square rows
/// j = 1..2qs-1, then the interface row j = 2qs (tooth openings only), then
/// the tooth rows. Tooth height is snapped to a whole number of cells.
class CombGrid {
 public:
  CombGrid(const DomainSpec& spec, int refine);

  [[nodiscard]] const DomainSpec& spec() const { return spec_; }
  [[nodiscard]] int refine() const { return refine_; }
  [[nodiscard]] double delta() const { return delta_; }
  [[nodiscard]] double h_snapped() const { return tooth_cells_ * delta_; }
  /// Grid cells across the square side, 2 q s.
  [[nodiscard]] int cells() const { return cells_; }
  [[nodiscard]] int tooth_cells() const { return tooth_cells_; }
  /// True when the teeth carry no unknowns (s = 1, or h snapped to 0).
  [[nodiscard]] bool degenerate_teeth() const { return teeth_nodes_per_row() == 0; }
  [[nodiscard]] Eigen::Index size() const { return n_; }

  [[nodiscard]] std::optional<Eigen::Index> index_of(GridNode node) const;
  [[nodiscard]] GridNode node_at(Eigen::Index index) const;

 private:
  [[nodiscard]] int teeth_nodes_per_row() const {
    return tooth_cells_ > 0 ? spec_.q * (refine_ - 1) : 0;
  }

  DomainSpec spec_;
  int refine_ = 1;
  int cells_ = 2;
  int tooth_cells_ = 0;
  double delta_ = 0.5;
  Eigen::Index square_nodes_ = 0;
  Eigen::Index n_ = 0;
};

CombGrid build_comb_grid(const DomainSpec& spec, int refine);

/// 5-point Dirichlet Laplacian (4/delta^2 on the diagonal, -1/delta^2 to each
/// interior neighbour) in the grid's node ordering.
struct DiscreteOperator {
  Eigen::SparseMatrix<double, Eigen::RowMajor> matrix;
  double delta = 0.0;
  Eigen::Index bandwidth = 0;

  [[nodiscard]] Eigen::Index size() const { return matrix.rows(); }
  /// Max absolute row sum.
  [[nodiscard]] double norm_inf() const;
};

DiscreteOperator assemble_dirichlet_operator(const CombGrid& grid);

/// Operator of the full (M x K)-node rectangle grid with spacing delta,
/// row-major by y.
DiscreteOperator assemble_rect_operator(int m_nodes, int k_nodes, double delta);

inline constexpr double kPivotFloorRel = 1e-10;
inline constexpr double kJitterStep = 1e-9;
inline constexpr int kJitterRetries = 3;

/// Count of eigenvalues <= lambda from the negative pivots of an LDL^T of
/// op - lambda I. On a near-zero pivot, retries at lambda (1 + j 1e-9),
/// j = 1..3, then throws FactorizationError.
SpectralCount inertia_count(const DiscreteOperator& op, double lambda);

/// Exact count for the (M x K) rectangle grid from its closed-form spectrum
/// (4/delta^2)(sin^2(m pi / (2(M+1))) + sin^2(k pi / (2(K+1)))).
SpectralCount fd_rect_count_closed_form(int m_nodes, int k_nodes, double delta, double lambda);

inline constexpr Eigen::Index kDenseOracleMax = 400;

/// All eigenvalues by dense Jacobi; n <= 400 (ResourceError otherwise).
Eigen::VectorXd dense_eig_oracle(const DiscreteOperator& op);

/// Counts entries of a sorted spectrum that are <= lambda (tagged dense_oracle).
SpectralCount count_from_spectrum(const Eigen::VectorXd& sorted_eigs, double lambda);

}  // namespace combweyl
