#pragma once

#include <Eigen/Core>

#include <filesystem>
#include <span>
#include <vector>

#include "graphsig/graph.hpp"

namespace graphsig {

/// Schur complement of L onto `kept` (sorted, unique):
///   L[k,k] - L[k,c] L[c,c]^{-1} L[c,k].
/// Tiny off-diagonal positives (< 1e-12) are dropped and diagonal entries in
/// (-1e-10, 0) clamped to zero. Keeping every vertex returns L unchanged.
SparseMatrix kron_reduce(const SparseMatrix& L, std::span<const int> kept);

struct MultiresolutionParams {
  double alpha = 1.0;     // level low-pass h(x) = 1 / (1 + alpha x)
  double epsilon = 0.005;  // interpolation regularizer
};

struct MultiresolutionLevel {
  Graph graph;
  std::vector<int> kept;  // indices into the previous level (empty for level 0)
  bool fallback_selection = false;  // polarity split was degenerate
};

struct Multiresolution {
  std::vector<MultiresolutionLevel> levels;  // levels[0] is the input graph
  MultiresolutionParams params;

  int num_levels() const { return static_cast<int>(levels.size()) - 1; }
};

/// Each level keeps the vertices where the largest-eigenvalue eigenvector of
/// the parent Laplacian is >= 0 (sign chosen so at least half are kept) and
/// Kron-reduces onto them. Needs a connected graph with the combinatorial
/// Laplacian.
Multiresolution graph_multiresolution(const Graph& g, int n_levels, const MultiresolutionParams& params = {});

/// Rebuilds a multiresolution from stored vertex selections.
Multiresolution multiresolution_from_kept(const Graph& g, const std::vector<std::vector<int>>& kept,
                                          const MultiresolutionParams& params = {});

/// Green's-function interpolation with Phi = (L + eps I)^{-1}: returns
/// Phi[:, kept] alpha where Phi[kept, kept] alpha = values.
Eigen::MatrixXd interpolate(const Graph& g, std::span<const int> kept, const Eigen::MatrixXd& values,
                            double epsilon);

struct PyramidLevel {
  Eigen::VectorXd coarse;            // signal on the kept vertices
  Eigen::VectorXd prediction_error;  // at the parent's full dimension
};

struct Pyramid {
  std::vector<PyramidLevel> levels;  // levels[l] maps level l to l + 1
  Eigen::VectorXd coarsest;
};

Pyramid pyramid_analysis(const Multiresolution& mr, const Eigen::VectorXd& f);
Eigen::VectorXd pyramid_synthesis(const Multiresolution& mr, const Pyramid& pyramid);

struct PyramidArchive {
  std::vector<std::vector<int>> kept;
  MultiresolutionParams params;
  Pyramid pyramid;
};

/// Directory layout: manifest.json (kept indices, alpha, epsilon),
/// level_<l>_coarse.csv, level_<l>_error.csv and coarsest.csv.
void write_pyramid(const std::filesystem::path& dir, const Multiresolution& mr, const Pyramid& pyramid);
PyramidArchive read_pyramid(const std::filesystem::path& dir);

}  // namespace graphsig
