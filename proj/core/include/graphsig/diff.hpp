#pragma once

#include <Eigen/Core>

#include <memory>
#include <string>
#include <vector>

#include "graphsig/graph.hpp"

namespace graphsig {

struct Edge {
  int source;
  int target;
  double weight;
};

/// Edge enumeration plus the Ne x N gradient matrix whose row e is
/// sqrt(w_e) (delta_target - delta_source).
///
/// Undirected edges are oriented source < target; directed graphs keep the
/// stored arc direction. Edges are listed in row-major order of W. For
/// undirected graphs gradient^T gradient is the combinatorial Laplacian.
struct IncidenceOperator {
  std::vector<Edge> edges;
  SparseMatrix gradient;
  int num_vertices = 0;

  int num_edges() const { return static_cast<int>(edges.size()); }
};

/// Builds (once) and caches the incidence operator of `g`.
std::shared_ptr<const IncidenceOperator> adj2vec(const Graph& g);

Eigen::MatrixXd grad(const IncidenceOperator& inc, const Eigen::MatrixXd& f);
/// Adjoint of grad, so div(grad(f)) = L f for the combinatorial Laplacian.
Eigen::MatrixXd div(const IncidenceOperator& inc, const Eigen::MatrixXd& s);

/// Graph total variation sum_e sqrt(w_e) |f(target) - f(source)|.
double graph_tv(const Graph& g, const Eigen::VectorXd& f);

/// "source,target,weight" lines.
std::string edges_csv(const IncidenceOperator& inc);

}  // namespace graphsig
