#pragma once

// Independent dense reference implementations used as test oracles.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "graphsig/graph.hpp"

namespace oracle {

using graphsig::LaplacianKind;
using graphsig::SparseMatrix;

inline Eigen::MatrixXd dense(const SparseMatrix& m) { return Eigen::MatrixXd(m); }

inline double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

/// Random nonnegative weights. `cycle` adds a weighted Hamiltonian cycle
/// 0 -> 1 -> ... -> 0 so the result is (strongly) connected.
inline Eigen::MatrixXd random_weights(std::mt19937_64& rng, int n, double p, bool directed, bool cycle) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || (!directed && j < i)) continue;
      if (u(rng) < p) W(i, j) = 0.1 + 2.0 * u(rng);
    }
  if (cycle)
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      const int a = directed ? i : std::min(i, j), b = directed ? j : std::max(i, j);
      if (W(a, b) == 0.0) W(a, b) = 0.5 + u(rng);
    }
  if (!directed) W = (W + W.transpose()).eval();
  return W;
}

/// Stationary distribution as the Perron eigenvector of P^T (dense
/// nonsymmetric eigensolver), normalized to sum 1.
inline Eigen::VectorXd perron_pi(const Eigen::MatrixXd& W) {
  const Eigen::VectorXd dout = W.rowwise().sum();
  const Eigen::MatrixXd P = dout.cwiseInverse().asDiagonal() * W;
  Eigen::EigenSolver<Eigen::MatrixXd> es(P.transpose());
  int best = 0;
  for (int i = 1; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()[i] - 1.0) < std::abs(es.eigenvalues()[best] - 1.0)) best = i;
  Eigen::VectorXd v = es.eigenvectors().col(best).real();
  return v / v.sum();
}

/// Table-2 Laplacian formulas evaluated densely.
inline Eigen::MatrixXd dense_laplacian(const Eigen::MatrixXd& W, LaplacianKind kind) {
  const int n = static_cast<int>(W.rows());
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  const Eigen::VectorXd dout = W.rowwise().sum();
  const Eigen::VectorXd din = W.colwise().sum().transpose();
  auto inv_sqrt = [](const Eigen::VectorXd& d) {
    return d.unaryExpr([](double x) { return x > 0.0 ? 1.0 / std::sqrt(x) : 0.0; });
  };
  switch (kind) {
    case LaplacianKind::CombinatorialU:
      return Eigen::MatrixXd(dout.asDiagonal()) - W;
    case LaplacianKind::NormalizedU: {
      const Eigen::VectorXd s = inv_sqrt(dout);
      return s.asDiagonal() * (Eigen::MatrixXd(dout.asDiagonal()) - W) * s.asDiagonal();
    }
    case LaplacianKind::CombinatorialD:
      return 0.5 * (Eigen::MatrixXd(dout.asDiagonal()) + Eigen::MatrixXd(din.asDiagonal()) - W - W.transpose());
    case LaplacianKind::DegreeNormalizedD:
      return I - 0.5 * inv_sqrt(dout).asDiagonal() * (W + W.transpose()) * inv_sqrt(din).asDiagonal();
    case LaplacianKind::DistributionNormalizedD: {
      const Eigen::VectorXd pi = perron_pi(W);
      const Eigen::MatrixXd P = dout.cwiseInverse().asDiagonal() * W;
      const Eigen::VectorXd sq = pi.cwiseSqrt(), isq = sq.cwiseInverse();
      return I - 0.5 * (sq.asDiagonal() * P * isq.asDiagonal() + isq.asDiagonal() * P.transpose() * sq.asDiagonal());
    }
  }
  return {};
}

/// L[k,k] - L[k,c] L[c,c]^{-1} L[c,k] by dense LU.
inline Eigen::MatrixXd schur(const Eigen::MatrixXd& L, const std::vector<int>& kept) {
  const int n = static_cast<int>(L.rows());
  std::vector<int> comp;
  for (int i = 0; i < n; ++i)
    if (std::find(kept.begin(), kept.end(), i) == kept.end()) comp.push_back(i);
  const int nk = static_cast<int>(kept.size()), nc = static_cast<int>(comp.size());
  Eigen::MatrixXd Lkk(nk, nk), Lkc(nk, nc), Lcc(nc, nc);
  for (int a = 0; a < nk; ++a) {
    for (int b = 0; b < nk; ++b) Lkk(a, b) = L(kept[a], kept[b]);
    for (int b = 0; b < nc; ++b) Lkc(a, b) = L(kept[a], comp[b]);
  }
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b) Lcc(a, b) = L(comp[a], comp[b]);
  if (nc == 0) return Lkk;
  return Lkk - Lkc * Lcc.fullPivLu().solve(Lkc.transpose());
}

/// Eigenvalues of a symmetric matrix via the general (nonsymmetric) solver.
inline Eigen::VectorXd eigenvalues_general(const Eigen::MatrixXd& A) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(A, false);
  Eigen::VectorXd e = es.eigenvalues().real();
  std::sort(e.data(), e.data() + e.size());
  return e;
}

/// U diag(g(e)) U^T f from a fresh symmetric eigensolve.
template <class G>
Eigen::MatrixXd spectral_filter(const Eigen::MatrixXd& L, G g, const Eigen::MatrixXd& f) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
  Eigen::VectorXd resp(L.rows());
  for (int i = 0; i < L.rows(); ++i) resp[i] = g(std::max(0.0, es.eigenvalues()[i]));
  return es.eigenvectors() * resp.asDiagonal() * es.eigenvectors().transpose() * f;
}

inline Eigen::MatrixXd random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = n(rng);
  return m;
}

}  // namespace oracle
