#pragma once

#include <Eigen/Core>

#include <memory>

#include "graphsig/graph.hpp"
#include "graphsig/kernel.hpp"

namespace graphsig {

/// Fourier basis of a graph: L = U diag(e) U^T.
struct SpectralData {
  Eigen::MatrixXd U;  // orthonormal eigenvectors as columns
  Eigen::VectorXd e;  // ascending eigenvalues
  double lmax = 0.0;
  bool exact_lmax = true;
  double mu = 0.0;  // coherence, max |U(i, l)|
};

/// 3000, or the GRAPHSIG_DENSE_CAP environment variable when set.
int default_dense_cap();

struct FourierOptions {
  int dense_cap = default_dense_cap();
};

/// Safety-inflated (x1.01) Lanczos estimate of the largest Laplacian
/// eigenvalue. Cached on the graph.
double estimate_lmax(const Graph& g);

/// Dense eigendecomposition of L, cached on the graph. Columns inside a
/// repeated eigenvalue are canonicalized (Gram-Schmidt of the projected
/// standard basis) and every column's first entry above 1e-8 in magnitude is
/// made positive, so the result is deterministic.
std::shared_ptr<const SpectralData> compute_fourier_basis(const Graph& g,
                                                          const FourierOptions& options = {});

/// Dense eigendecomposition of an arbitrary symmetric matrix with the same
/// canonicalization as compute_fourier_basis.
SpectralData symmetric_eigen(const Eigen::MatrixXd& L);

/// Cached basis, or nullptr.
std::shared_ptr<const SpectralData> fourier_basis(const Graph& g);
bool has_fourier_basis(const Graph& g);

/// Exact e[N-1] when the basis is cached, otherwise estimate_lmax(g).
double graph_lmax(const Graph& g);

/// fhat = U^T f, column by column.
Eigen::MatrixXd gft(const Graph& g, const Eigen::MatrixXd& f);
/// f = U fhat.
Eigen::MatrixXd igft(const Graph& g, const Eigen::MatrixXd& fhat);

/// sqrt(N) g(L) delta_i. Uses the Fourier basis when cached, else a
/// Chebyshev approximation of `chebyshev_order`.
Eigen::VectorXd localize(const Graph& g, const Kernel& kernel, int vertex, int chebyshev_order = 30);

}  // namespace graphsig
