#include "combweyl/fdlap.hpp"

#include <Eigen/SparseCore>
#include <cmath>
#include <sstream>
#include <string>

#include "combweyl/errors.hpp"
#include "combweyl/jacobi_eigen.hpp"
#include "combweyl/profile_ldlt.hpp"

namespace combweyl {

CombGrid::CombGrid(const DomainSpec& spec, int refine) : spec_(spec), refine_(refine) {
  spec_.validate();
  if (refine < 1) throw DomainError("CombGrid: refinement s must be >= 1");
  if (static_cast<long long>(spec_.q) * refine > kMaxTeethTimesRefine)
    throw ResourceError("CombGrid: q * s = " + std::to_string(static_cast<long long>(spec_.q) * refine) +
                        " exceeds the guard " + std::to_string(kMaxTeethTimesRefine));
  cells_ = 2 * spec_.q * refine_;
  delta_ = 1.0 / cells_;
  tooth_cells_ = static_cast<int>(std::lround(spec_.h / delta_));
  square_nodes_ = static_cast<Eigen::Index>(cells_ - 1) * (cells_ - 1);
  n_ = square_nodes_ + static_cast<Eigen::Index>(tooth_cells_) * teeth_nodes_per_row();
}

std::optional<Eigen::Index> CombGrid::index_of(GridNode node) const {
  const int side = cells_ - 1;
  if (node.i <= 0 || node.i >= cells_ || node.j <= 0) return std::nullopt;
  if (node.j < cells_)
    return static_cast<Eigen::Index>(node.j - 1) * side + (node.i - 1);
  // Interface row (j = cells_) and tooth rows share the opening pattern.
  const int row = node.j - cells_;
  if (row >= tooth_cells_ || refine_ < 2) return std::nullopt;
  const int period = 2 * refine_;
  const int tooth = node.i / period;
  const int offset = node.i % period;
  if (offset < 1 || offset > refine_ - 1) return std::nullopt;
  return square_nodes_ + static_cast<Eigen::Index>(row) * teeth_nodes_per_row() +
         static_cast<Eigen::Index>(tooth) * (refine_ - 1) + (offset - 1);
}

GridNode CombGrid::node_at(Eigen::Index index) const {
  if (index < 0 || index >= n_) throw DomainError("CombGrid::node_at: index out of range");
  const int side = cells_ - 1;
  if (index < square_nodes_)
    return {static_cast<int>(index % side) + 1, static_cast<int>(index / side) + 1};
  const Eigen::Index rest = index - square_nodes_;
  const int per_row = teeth_nodes_per_row();
  const int row = static_cast<int>(rest / per_row);
  const int within = static_cast<int>(rest % per_row);
  const int tooth = within / (refine_ - 1);
  const int offset = within % (refine_ - 1) + 1;
  return {tooth * 2 * refine_ + offset, cells_ + row};
}

CombGrid build_comb_grid(const DomainSpec& spec, int refine) { return CombGrid(spec, refine); }

double DiscreteOperator::norm_inf() const {
  double best = 0.0;
  for (Eigen::Index r = 0; r < matrix.outerSize(); ++r) {
    double sum = 0.0;
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(matrix, r); it; ++it)
      sum += std::abs(it.value());
    best = std::max(best, sum);
  }
  return best;
}

namespace {

template <typename IndexOf>
DiscreteOperator assemble(Eigen::Index n, double delta, const std::vector<GridNode>& nodes,
                          IndexOf&& index_of) {
  const double inv = 1.0 / (delta * delta);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(5 * n));
  Eigen::Index bandwidth = 0;
  for (Eigen::Index row = 0; row < n; ++row) {
    const GridNode node = nodes[static_cast<std::size_t>(row)];
    triplets.emplace_back(row, row, 4.0 * inv);
    const GridNode neighbours[] = {
        {node.i - 1, node.j}, {node.i + 1, node.j}, {node.i, node.j - 1}, {node.i, node.j + 1}};
    for (const GridNode& nb : neighbours) {
      if (const auto col = index_of(nb)) {
        triplets.emplace_back(row, *col, -inv);
        bandwidth = std::max(bandwidth, row - *col);
      }
    }
  }
  DiscreteOperator op;
  op.matrix.resize(n, n);
  op.matrix.setFromTriplets(triplets.begin(), triplets.end());
  op.matrix.makeCompressed();
  op.delta = delta;
  op.bandwidth = bandwidth;
  return op;
}

}  // namespace

DiscreteOperator assemble_dirichlet_operator(const CombGrid& grid) {
  std::vector<GridNode> nodes;
  nodes.reserve(static_cast<std::size_t>(grid.size()));
  for (Eigen::Index k = 0; k < grid.size(); ++k) nodes.push_back(grid.node_at(k));
  return assemble(grid.size(), grid.delta(), nodes,
                  [&grid](GridNode nb) { return grid.index_of(nb); });
}

DiscreteOperator assemble_rect_operator(int m_nodes, int k_nodes, double delta) {
  if (m_nodes < 1 || k_nodes < 1) throw DomainError("rect operator: node counts must be >= 1");
  if (!(delta > 0.0)) throw DomainError("rect operator: delta must be positive");
  std::vector<GridNode> nodes;
  for (int j = 1; j <= k_nodes; ++j)
    for (int i = 1; i <= m_nodes; ++i) nodes.push_back({i, j});
  const auto index_of = [m_nodes, k_nodes](GridNode nb) -> std::optional<Eigen::Index> {
    if (nb.i < 1 || nb.i > m_nodes || nb.j < 1 || nb.j > k_nodes) return std::nullopt;
    return static_cast<Eigen::Index>(nb.j - 1) * m_nodes + (nb.i - 1);
  };
  return assemble(static_cast<Eigen::Index>(m_nodes) * k_nodes, delta, nodes, index_of);
}

SpectralCount inertia_count(const DiscreteOperator& op, double lambda) {
  if (!std::isfinite(lambda)) throw DomainError("inertia_count: lambda must be finite");
  const ProfileLdlt<double> ldlt(op.matrix);
  const double floor = kPivotFloorRel * op.norm_inf();
  for (int attempt = 0; attempt <= kJitterRetries; ++attempt) {
    const double shift = lambda * (1.0 + attempt * kJitterStep);
    const Inertia in = ldlt.inertia(shift, floor);
    if (!in.breakdown) return {lambda, in.negative, CountMethod::fd_inertia, attempt * kJitterStep};
  }
  std::ostringstream msg;
  msg.precision(17);
  msg << "inertia_count: pivot below " << floor << " at lambda = " << lambda << " after "
      << kJitterRetries << " jitter retries";
  throw FactorizationError(msg.str());
}

SpectralCount fd_rect_count_closed_form(int m_nodes, int k_nodes, double delta, double lambda) {
  if (m_nodes < 1 || k_nodes < 1) throw DomainError("closed-form FD count: node counts must be >= 1");
  if (!(delta > 0.0)) throw DomainError("closed-form FD count: delta must be positive");
  const double scale = 4.0 / (delta * delta);
  std::vector<double> sx(static_cast<std::size_t>(m_nodes));
  for (int m = 1; m <= m_nodes; ++m) {
    const double s = std::sin(m * kPi / (2.0 * (m_nodes + 1)));
    sx[static_cast<std::size_t>(m - 1)] = scale * s * s;
  }
  std::int64_t count = 0;
  for (int k = 1; k <= k_nodes; ++k) {
    const double s = std::sin(k * kPi / (2.0 * (k_nodes + 1)));
    const double ey = scale * s * s;
    for (const double ex : sx)
      if (ex + ey <= lambda) ++count;
  }
  return {lambda, count, CountMethod::closed_form_fd, 0.0};
}

Eigen::VectorXd dense_eig_oracle(const DiscreteOperator& op) {
  if (op.size() > kDenseOracleMax)
    throw ResourceError("dense_eig_oracle: n = " + std::to_string(op.size()) + " exceeds 400");
  const Eigen::MatrixXd dense = Eigen::MatrixXd(op.matrix);
  return jacobi_eigenvalues(dense);
}

SpectralCount count_from_spectrum(const Eigen::VectorXd& sorted_eigs, double lambda) {
  const auto* end = sorted_eigs.data() + sorted_eigs.size();
  const auto count = std::upper_bound(sorted_eigs.data(), end, lambda) - sorted_eigs.data();
  return {lambda, static_cast<std::int64_t>(count), CountMethod::dense_oracle, 0.0};
}

}  // namespace combweyl
