#include "graphsig/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "graphsig/chebyshev.hpp"
#include "graphsig/error.hpp"
#include "graphsig/lanczos.hpp"

namespace graphsig {
namespace {

constexpr double kLmaxInflation = 1.01;

bool is_symmetric(const SparseMatrix& L) {
  const SparseMatrix diff = L - SparseMatrix(L.transpose());
  double scale = 1.0;
  for (int k = 0; k < L.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(L, k); it; ++it) scale = std::max(scale, std::abs(it.value()));
  for (int k = 0; k < diff.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(diff, k); it; ++it)
      if (std::abs(it.value()) > 1e-12 * scale) return false;
  return true;
}

// Replace the columns of an eigenvalue cluster by the Gram-Schmidt
// orthonormalization of P e_0, P e_1, ... where P projects on the cluster.
void canonicalize_cluster(Eigen::MatrixXd& U, int first, int count) {
  const Eigen::MatrixXd Q = U.middleCols(first, count);
  Eigen::MatrixXd chosen(U.rows(), count);
  int found = 0;
  for (Eigen::Index r = 0; r < U.rows() && found < count; ++r) {
    Eigen::VectorXd v = Q * Q.row(r).transpose();
    for (int pass = 0; pass < 2; ++pass)
      v -= chosen.leftCols(found) * (chosen.leftCols(found).transpose() * v);
    const double norm = v.norm();
    if (norm > 1e-6) chosen.col(found++) = v / norm;
  }
  if (found == count) U.middleCols(first, count) = chosen;
}

}  // namespace

int default_dense_cap() {
  if (const char* env = std::getenv("GRAPHSIG_DENSE_CAP")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<int>(value);
  }
  return 3000;
}

double estimate_lmax(const Graph& g) {
  return *g.cache().lmax_estimate.get_or_compute([&g] {
    const int n = g.N();
    if (n <= 1 || g.L().nonZeros() == 0) return 0.0;
    const SparseMatrix& L = g.L();
    LanczosResult r;
    if (is_symmetric(L)) {
      r = lanczos_largest([&L](const Eigen::VectorXd& x, Eigen::VectorXd& y) { y = L * x; }, n);
      return kLmaxInflation * std::max(r.value, 0.0);
    }
    // Non-symmetric operator: the largest singular value bounds |lambda|.
    const SparseMatrix Lt = L.transpose();
    r = lanczos_largest(
        [&L, &Lt](const Eigen::VectorXd& x, Eigen::VectorXd& y) { y = Lt * (L * x); }, n);
    return kLmaxInflation * std::sqrt(std::max(r.value, 0.0));
  });
}

SpectralData symmetric_eigen(const Eigen::MatrixXd& L) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::SolverFailure, "dense eigensolver did not converge");
  SpectralData sd;
  sd.e = es.eigenvalues();
  sd.U = es.eigenvectors();
  const int n = static_cast<int>(sd.e.size());

  const double tol = 1e-9 * std::max(1.0, sd.e.cwiseAbs().maxCoeff());
  for (int first = 0; first < n;) {
    int last = first + 1;
    while (last < n && sd.e[last] - sd.e[last - 1] <= tol) ++last;
    if (last - first > 1) canonicalize_cluster(sd.U, first, last - first);
    first = last;
  }
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i < n; ++i) {
      if (std::abs(sd.U(i, l)) > 1e-8) {
        if (sd.U(i, l) < 0.0) sd.U.col(l) *= -1.0;
        break;
      }
    }
  }
  sd.lmax = n > 0 ? sd.e[n - 1] : 0.0;
  sd.exact_lmax = true;
  sd.mu = n > 0 ? sd.U.cwiseAbs().maxCoeff() : 0.0;
  return sd;
}

std::shared_ptr<const SpectralData> compute_fourier_basis(const Graph& g, const FourierOptions& options) {
  if (auto cached = g.cache().fourier.get()) return cached;
  if (g.N() > options.dense_cap)
    throw Error(ErrorCode::GraphTooLargeForDense,
                "N = " + std::to_string(g.N()) + " exceeds the dense cap of " +
                    std::to_string(options.dense_cap) + "; use Chebyshev filtering");
  if (!is_symmetric(g.L()))
    throw Error(ErrorCode::NonSymmetricLaplacian,
                std::string(laplacian_kind_name(g.lap_kind())) + " Laplacian of this graph is not symmetric");
  return g.cache().fourier.get_or_compute([&g] { return symmetric_eigen(Eigen::MatrixXd(g.L())); });
}

std::shared_ptr<const SpectralData> fourier_basis(const Graph& g) { return g.cache().fourier.get(); }

bool has_fourier_basis(const Graph& g) { return fourier_basis(g) != nullptr; }

double graph_lmax(const Graph& g) {
  if (auto sd = fourier_basis(g)) return sd->lmax;
  return estimate_lmax(g);
}

namespace {

std::shared_ptr<const SpectralData> require_basis(const Graph& g) {
  auto sd = fourier_basis(g);
  if (!sd) throw Error(ErrorCode::MissingFourierBasis, "call compute_fourier_basis first");
  return sd;
}

void require_rows(const Graph& g, const Eigen::MatrixXd& m) {
  if (m.rows() != g.N())
    throw Error(ErrorCode::ShapeMismatch, "signal has " + std::to_string(m.rows()) +
                                              " rows, graph has " + std::to_string(g.N()) + " vertices");
}

}  // namespace

Eigen::MatrixXd gft(const Graph& g, const Eigen::MatrixXd& f) {
  const auto sd = require_basis(g);
  require_rows(g, f);
  return sd->U.transpose() * f;
}

Eigen::MatrixXd igft(const Graph& g, const Eigen::MatrixXd& fhat) {
  const auto sd = require_basis(g);
  require_rows(g, fhat);
  return sd->U * fhat;
}

Eigen::VectorXd localize(const Graph& g, const Kernel& kernel, int vertex, int chebyshev_order) {
  if (vertex < 0 || vertex >= g.N())
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(vertex) + " out of range");
  const double scale = std::sqrt(static_cast<double>(g.N()));
  if (auto sd = fourier_basis(g)) {
    const Eigen::VectorXd weights = kernel(sd->e.array()).matrix().cwiseProduct(sd->U.row(vertex).transpose());
    return scale * (sd->U * weights);
  }
  Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(g.N(), 1);
  delta(vertex, 0) = 1.0;
  const auto coeffs = chebyshev_coeffs(kernel, chebyshev_order, graph_lmax(g));
  return scale * chebyshev_apply(g, coeffs, delta).col(0);
}

}  // namespace graphsig
