#include "graphsig/graph.hpp"

#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "graphsig/error.hpp"

namespace graphsig {
namespace {

constexpr double kSymmetryTol = 1e-12;

double max_abs_asymmetry(const SparseMatrix& W) {
  const SparseMatrix diff = W - SparseMatrix(W.transpose());
  double worst = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(diff, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
  return worst;
}

// Breadth-first reachability from vertex 0, where column v of the matrix
// lists the vertices adjacent to v.
std::vector<char> reachable_from_zero(const SparseMatrix& out_arcs_by_column) {
  const int n = static_cast<int>(out_arcs_by_column.cols());
  std::vector<char> seen(n, 0);
  if (n == 0) return seen;
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (SparseMatrix::InnerIterator it(out_arcs_by_column, v); it; ++it) {
      const int u = static_cast<int>(it.row());
      if (!seen[u]) {
        seen[u] = 1;
        frontier.push(u);
      }
    }
  }
  return seen;
}

bool all_set(const std::vector<char>& flags) {
  for (char f : flags)
    if (!f) return false;
  return true;
}

Eigen::VectorXd column_sums(const SparseMatrix& W) {
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(W.cols());
  for (int j = 0; j < W.outerSize(); ++j)
    for (SparseMatrix::InnerIterator it(W, j); it; ++it) sums[j] += it.value();
  return sums;
}

Eigen::VectorXd row_sums(const SparseMatrix& W) {
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(W.rows());
  for (int j = 0; j < W.outerSize(); ++j)
    for (SparseMatrix::InnerIterator it(W, j); it; ++it) sums[it.row()] += it.value();
  return sums;
}

SparseMatrix from_triplets(int n, const std::vector<Triplet>& triplets) {
  SparseMatrix m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.makeCompressed();
  return m;
}

SparseMatrix combinatorial_undirected(const SparseMatrix& W, const Eigen::VectorXd& d) {
  std::vector<Triplet> t;
  t.reserve(W.nonZeros() + W.rows());
  for (int j = 0; j < W.outerSize(); ++j)
    for (SparseMatrix::InnerIterator it(W, j); it; ++it) t.emplace_back(it.row(), j, -it.value());
  for (int i = 0; i < W.rows(); ++i)
    if (d[i] != 0.0) t.emplace_back(i, i, d[i]);
  return from_triplets(static_cast<int>(W.rows()), t);
}

SparseMatrix normalized_undirected(const SparseMatrix& W, const Eigen::VectorXd& d) {
  const int n = static_cast<int>(W.rows());
  Eigen::VectorXd inv_sqrt(n);
  for (int i = 0; i < n; ++i) inv_sqrt[i] = d[i] > 0.0 ? 1.0 / std::sqrt(d[i]) : 0.0;
  std::vector<Triplet> t;
  t.reserve(W.nonZeros() + n);
  for (int j = 0; j < W.outerSize(); ++j)
    for (SparseMatrix::InnerIterator it(W, j); it; ++it)
      t.emplace_back(it.row(), j, -it.value() * inv_sqrt[it.row()] * inv_sqrt[j]);
  for (int i = 0; i < n; ++i)
    if (d[i] > 0.0) t.emplace_back(i, i, 1.0);
  return from_triplets(n, t);
}

SparseMatrix combinatorial_directed(const SparseMatrix& W) {
  const int n = static_cast<int>(W.rows());
  const Eigen::VectorXd d_out = row_sums(W);
  const Eigen::VectorXd d_in = column_sums(W);
  std::vector<Triplet> t;
  t.reserve(2 * W.nonZeros() + n);
  for (int j = 0; j < W.outerSize(); ++j)
    for (SparseMatrix::InnerIterator it(W, j); it; ++it) {
      t.emplace_back(it.row(), j, -0.5 * it.value());
      t.emplace_back(j, it.row(), -0.5 * it.value());
    }
  for (int i = 0; i < n; ++i) {
    const double diag = 0.5 * (d_out[i] + d_in[i]);
    if (diag != 0.0) t.emplace_back(i, i, diag);
  }
  return from_triplets(n, t);
}

SparseMatrix degree_normalized_directed(const SparseMatrix& W) {
  const int n = static_cast<int>(W.rows());
  const Eigen::VectorXd d_out = row_sums(W);
  const Eigen::VectorXd d_in = column_sums(W);
  for (int i = 0; i < n; ++i)
    if (d_out[i] <= 0.0 || d_in[i] <= 0.0)
      throw Error(ErrorCode::ZeroDegreeVertex,
                  "vertex " + std::to_string(i) + " has zero in- or out-degree");
  // I - 1/2 D+^{-1/2} (W + W^T) D-^{-1/2}
  std::vector<Triplet> t;
  t.reserve(2 * W.nonZeros() + n);
  for (int j = 0; j < W.outerSize(); ++j)
    for (SparseMatrix::InnerIterator it(W, j); it; ++it) {
      const int i = static_cast<int>(it.row());
      const double w = it.value();
      t.emplace_back(i, j, -0.5 * w / std::sqrt(d_out[i] * d_in[j]));
      t.emplace_back(j, i, -0.5 * w / std::sqrt(d_out[j] * d_in[i]));
    }
  for (int i = 0; i < n; ++i) t.emplace_back(i, i, 1.0);
  return from_triplets(n, t);
}

SparseMatrix distribution_normalized_directed(const Graph& g) {
  if (!is_strongly_connected(g.W()))
    throw Error(ErrorCode::NotStronglyConnected,
                "distribution-normalized Laplacian needs a strongly connected graph");
  const DirectedData dd = stationary_distribution(g);
  const int n = g.N();
  const Eigen::VectorXd sqrt_pi = dd.pi.cwiseSqrt();
  // I - 1/2 (Pi^{1/2} P Pi^{-1/2} + Pi^{-1/2} P^T Pi^{1/2})
  std::vector<Triplet> t;
  t.reserve(2 * dd.P.nonZeros() + n);
  for (int j = 0; j < dd.P.outerSize(); ++j)
    for (SparseMatrix::InnerIterator it(dd.P, j); it; ++it) {
      const int i = static_cast<int>(it.row());
      const double v = 0.5 * sqrt_pi[i] * it.value() / sqrt_pi[j];
      t.emplace_back(i, j, -v);
      t.emplace_back(j, i, -v);
    }
  for (int i = 0; i < n; ++i) t.emplace_back(i, i, 1.0);
  return from_triplets(n, t);
}

}  // namespace

std::string_view laplacian_kind_name(LaplacianKind kind) noexcept {
  switch (kind) {
    case LaplacianKind::CombinatorialU: return "CombinatorialU";
    case LaplacianKind::NormalizedU: return "NormalizedU";
    case LaplacianKind::CombinatorialD: return "CombinatorialD";
    case LaplacianKind::DegreeNormalizedD: return "DegreeNormalizedD";
    case LaplacianKind::DistributionNormalizedD: return "DistributionNormalizedD";
  }
  return "Unknown";
}

LaplacianKind parse_laplacian_kind(std::string_view text) {
  if (text == "CombinatorialU" || text == "combinatorial") return LaplacianKind::CombinatorialU;
  if (text == "NormalizedU" || text == "normalized") return LaplacianKind::NormalizedU;
  if (text == "CombinatorialD" || text == "combinatorial-directed") return LaplacianKind::CombinatorialD;
  if (text == "DegreeNormalizedD" || text == "degree-normalized") return LaplacianKind::DegreeNormalizedD;
  if (text == "DistributionNormalizedD" || text == "distribution-normalized")
    return LaplacianKind::DistributionNormalizedD;
  throw Error(ErrorCode::BadParameter, "unknown Laplacian kind '" + std::string(text) + "'");
}

bool is_directed_kind(LaplacianKind kind) noexcept {
  return kind == LaplacianKind::CombinatorialD || kind == LaplacianKind::DegreeNormalizedD ||
         kind == LaplacianKind::DistributionNormalizedD;
}

Graph graph_from_weights(const SparseMatrix& W_in, const GraphOptions& options) {
  if (W_in.rows() != W_in.cols())
    throw Error(ErrorCode::NonSquare, "weight matrix is " + std::to_string(W_in.rows()) + "x" +
                                          std::to_string(W_in.cols()));
  if (W_in.rows() == 0) throw Error(ErrorCode::EmptyGraph, "weight matrix has no vertices");
  const int n = static_cast<int>(W_in.rows());

  Graph g;
  std::vector<Triplet> kept;
  kept.reserve(W_in.nonZeros());
  for (int j = 0; j < W_in.outerSize(); ++j)
    for (SparseMatrix::InnerIterator it(W_in, j); it; ++it) {
      const double w = it.value();
      if (!std::isfinite(w)) throw Error(ErrorCode::NonFinite, "weight matrix has a non-finite entry");
      if (w < 0.0) throw Error(ErrorCode::NegativeWeight, "weight matrix has a negative entry");
      if (w == 0.0) continue;
      if (it.row() == j) {
        g.self_loops_dropped_ = true;
        continue;
      }
      kept.emplace_back(it.row(), j, w);
    }
  SparseMatrix W = from_triplets(n, kept);

  const double asym = max_abs_asymmetry(W);
  bool directed = false;
  switch (options.directed) {
    case Directedness::Directed: directed = true; break;
    case Directedness::Undirected: directed = false; break;
    case Directedness::Auto: directed = asym > kSymmetryTol; break;
  }
  if (!directed) {
    g.symmetrized_ = asym > kSymmetryTol;
    W = 0.5 * (W + SparseMatrix(W.transpose()));
    W.prune([](Eigen::Index, Eigen::Index, double v) { return v != 0.0; });
    W.makeCompressed();
  }

  g.W_ = std::move(W);
  g.directed_ = directed;
  g.degrees_ = row_sums(g.W_);
  g.num_edges_ = static_cast<int>(directed ? g.W_.nonZeros() : g.W_.nonZeros() / 2);
  g.name_ = options.name;

  if (options.coords) {
    const auto& c = *options.coords;
    if (c.rows() != n || (c.cols() != 2 && c.cols() != 3))
      throw Error(ErrorCode::ShapeMismatch, "coordinates must be N x 2 or N x 3");
    g.coords_ = c;
  }

  const LaplacianKind kind =
      options.kind.value_or(directed ? LaplacianKind::CombinatorialD : LaplacianKind::CombinatorialU);
  g.L_ = laplacian(g, kind);
  g.kind_ = kind;
  return g;
}

Graph graph_from_dense(const Eigen::MatrixXd& W, const GraphOptions& options) {
  return graph_from_weights(W.sparseView(), options);
}

Graph Graph::with_laplacian(LaplacianKind kind) const {
  Graph g = *this;
  g.cache_ = std::make_shared<detail::GraphCache>();
  g.L_ = laplacian(*this, kind);
  g.kind_ = kind;
  return g;
}

Graph Graph::with_coords(Eigen::MatrixXd coords) const {
  if (coords.rows() != N() || (coords.cols() != 2 && coords.cols() != 3))
    throw Error(ErrorCode::ShapeMismatch, "coordinates must be N x 2 or N x 3");
  Graph g = *this;
  g.coords_ = std::move(coords);
  return g;
}

Graph Graph::with_name(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

Graph Graph::with_plotting(PlottingParams plotting) const {
  Graph g = *this;
  g.plotting_ = std::move(plotting);
  return g;
}

SparseMatrix laplacian(const Graph& g, LaplacianKind kind) {
  if (!is_directed_kind(kind) && g.directed())
    throw Error(ErrorCode::KindMismatch,
                std::string(laplacian_kind_name(kind)) + " requires an undirected graph");
  switch (kind) {
    case LaplacianKind::CombinatorialU: return combinatorial_undirected(g.W(), g.d());
    case LaplacianKind::NormalizedU: return normalized_undirected(g.W(), g.d());
    case LaplacianKind::CombinatorialD: return combinatorial_directed(g.W());
    case LaplacianKind::DegreeNormalizedD: return degree_normalized_directed(g.W());
    case LaplacianKind::DistributionNormalizedD: return distribution_normalized_directed(g);
  }
  throw Error(ErrorCode::BadParameter, "unknown Laplacian kind");
}

DirectedData stationary_distribution(const Graph& g, int max_iter, double tol) {
  const int n = g.N();
  DirectedData dd;
  dd.d_out = row_sums(g.W());
  dd.d_in = column_sums(g.W());
  for (int i = 0; i < n; ++i)
    if (dd.d_out[i] <= 0.0)
      throw Error(ErrorCode::ZeroOutDegree, "vertex " + std::to_string(i) + " has no outgoing edge");

  std::vector<Triplet> t;
  t.reserve(g.W().nonZeros());
  for (int j = 0; j < g.W().outerSize(); ++j)
    for (SparseMatrix::InnerIterator it(g.W(), j); it; ++it)
      t.emplace_back(it.row(), j, it.value() / dd.d_out[it.row()]);
  dd.P = from_triplets(n, t);
  const SparseMatrix Pt = dd.P.transpose();

  // The lazy walk (I + P)/2 has the same fixed point and no periodicity.
  Eigen::VectorXd pi = Eigen::VectorXd::Constant(n, 1.0 / n);
  bool converged = false;
  int iter = 0;
  double step = 0.0;
  while (iter < max_iter) {
    ++iter;
    Eigen::VectorXd next = 0.5 * (pi + Pt * pi);
    next /= next.sum();
    step = (next - pi).lpNorm<1>();
    pi = std::move(next);
    if (step <= tol) {
      converged = true;
      break;
    }
  }
  dd.iterations = iter;
  dd.residual = (Pt * pi - pi).lpNorm<Eigen::Infinity>();
  if (!converged)
    throw Error(ErrorCode::NotConverged, "stationary distribution did not converge after " +
                                             std::to_string(iter) + " iterations (last step " +
                                             std::to_string(step) + ", residual " +
                                             std::to_string(dd.residual) + ")");
  dd.pi = std::move(pi);
  return dd;
}

bool is_strongly_connected(const SparseMatrix& W) {
  const SparseMatrix Wt = W.transpose();
  // Column j of W^T lists the out-neighbours of j; column j of W the in-neighbours.
  return all_set(reachable_from_zero(Wt)) && all_set(reachable_from_zero(W));
}

bool is_connected(const Graph& g) {
  if (!g.directed()) return all_set(reachable_from_zero(g.W()));
  const SparseMatrix sym = g.W() + SparseMatrix(g.W().transpose());
  return all_set(reachable_from_zero(sym));
}

}  // namespace graphsig
