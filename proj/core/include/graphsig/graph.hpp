#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace graphsig {

using SparseMatrix = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

/// Laplacian definitions. The U suffix marks undirected kinds, D directed.
enum class LaplacianKind {
  CombinatorialU,
  NormalizedU,
  CombinatorialD,
  DegreeNormalizedD,
  DistributionNormalizedD,
};

std::string_view laplacian_kind_name(LaplacianKind kind) noexcept;
/// Accepts the enum spelling ("NormalizedU") or the CLI spelling ("normalized").
LaplacianKind parse_laplacian_kind(std::string_view text);
bool is_directed_kind(LaplacianKind kind) noexcept;

enum class Directedness { Undirected, Directed, Auto };

struct PlottingParams {
  double vertex_size = 5.0;
  double edge_width = 1.0;
  std::string colormap = "viridis";
};

struct SpectralData;
struct IncidenceOperator;

namespace detail {

// Compute-once cell. Concurrent callers may both compute; the first result
// published wins and every caller gets the published value.
template <typename T>
class OnceCell {
 public:
  std::shared_ptr<const T> get() const {
    std::lock_guard lock(mutex_);
    return value_;
  }

  template <typename Fn>
  std::shared_ptr<const T> get_or_compute(Fn&& compute) const {
    if (auto existing = get()) return existing;
    auto fresh = std::make_shared<const T>(compute());
    std::lock_guard lock(mutex_);
    if (!value_) value_ = std::move(fresh);
    return value_;
  }

 private:
  mutable std::mutex mutex_;
  mutable std::shared_ptr<const T> value_;
};

struct GraphCache {
  OnceCell<SpectralData> fourier;
  OnceCell<IncidenceOperator> incidence;
  OnceCell<double> lmax_estimate;
};

}  // namespace detail

struct GraphOptions {
  Directedness directed = Directedness::Auto;
  /// Defaults to CombinatorialU or CombinatorialD depending on directedness.
  std::optional<LaplacianKind> kind;
  std::optional<Eigen::MatrixXd> coords;
  std::string name = "graph";
};

/// A weighted graph fully determined by its sparse weight matrix W.
/// Immutable once built; derived spectral/incidence data is cached lazily.
class Graph {
 public:
  const SparseMatrix& W() const noexcept { return W_; }
  const SparseMatrix& L() const noexcept { return L_; }
  LaplacianKind lap_kind() const noexcept { return kind_; }
  /// Degrees (out-degrees for directed graphs).
  const Eigen::VectorXd& d() const noexcept { return degrees_; }
  int N() const noexcept { return static_cast<int>(W_.rows()); }
  int Ne() const noexcept { return num_edges_; }
  bool directed() const noexcept { return directed_; }
  const std::string& name() const noexcept { return name_; }
  bool has_coords() const noexcept { return coords_.has_value(); }
  const std::optional<Eigen::MatrixXd>& coords() const noexcept { return coords_; }
  const PlottingParams& plotting() const noexcept { return plotting_; }

  /// True when diagonal entries were stripped at construction.
  bool self_loops_dropped() const noexcept { return self_loops_dropped_; }
  /// True when an undirected graph was built from input asymmetric beyond 1e-12.
  bool symmetrized() const noexcept { return symmetrized_; }

  /// Same weights, Laplacian rebuilt for `kind`.
  Graph with_laplacian(LaplacianKind kind) const;
  Graph with_coords(Eigen::MatrixXd coords) const;
  Graph with_name(std::string name) const;
  Graph with_plotting(PlottingParams plotting) const;

  const detail::GraphCache& cache() const noexcept { return *cache_; }

 private:
  friend Graph graph_from_weights(const SparseMatrix& W, const GraphOptions& options);
  Graph() : cache_(std::make_shared<detail::GraphCache>()) {}

  SparseMatrix W_;
  SparseMatrix L_;
  LaplacianKind kind_ = LaplacianKind::CombinatorialU;
  Eigen::VectorXd degrees_;
  int num_edges_ = 0;
  bool directed_ = false;
  std::string name_;
  std::optional<Eigen::MatrixXd> coords_;
  PlottingParams plotting_;
  bool self_loops_dropped_ = false;
  bool symmetrized_ = false;
  std::shared_ptr<detail::GraphCache> cache_;
};

/// Validates W, prunes explicit zeros and self-loops, symmetrizes undirected
/// input by (W + W^T)/2 and builds the requested Laplacian.
Graph graph_from_weights(const SparseMatrix& W, const GraphOptions& options = {});
Graph graph_from_dense(const Eigen::MatrixXd& W, const GraphOptions& options = {});

/// Random-walk quantities of a directed graph.
struct DirectedData {
  Eigen::VectorXd d_out;
  Eigen::VectorXd d_in;
  SparseMatrix P;   // row-stochastic, P(i,j) = W(i,j) / d_out(i)
  Eigen::VectorXd pi;  // stationary distribution, sums to one
  int iterations = 0;
  double residual = 0.0;  // ||pi^T P - pi^T||_inf
};

/// Power iteration on the lazy walk (I + P)/2 from the uniform start.
DirectedData stationary_distribution(const Graph& g, int max_iter = 10000, double tol = 1e-12);

/// Builds the Laplacian of `kind` from the weights of `g`.
SparseMatrix laplacian(const Graph& g, LaplacianKind kind);

bool is_connected(const Graph& g);
bool is_strongly_connected(const SparseMatrix& W);

}  // namespace graphsig
