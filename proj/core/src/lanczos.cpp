#include "graphsig/lanczos.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <vector>

#include "graphsig/rng.hpp"

namespace graphsig {

LanczosResult lanczos_largest(const LinearOperator& apply, int n, const LanczosOptions& options) {
  LanczosResult result;
  if (n <= 0) return result;

  Rng rng(options.seed);
  Eigen::VectorXd q(n);
  for (int i = 0; i < n; ++i) q[i] = rng.normal();
  q.normalize();

  const int max_steps = std::min(n, std::max(1, options.max_steps));
  Eigen::MatrixXd Q(n, max_steps);
  std::vector<double> alpha, beta;
  Eigen::VectorXd w(n);

  for (int j = 0; j < max_steps; ++j) {
    Q.col(j) = q;
    apply(q, w);
    const double a = q.dot(w);
    alpha.push_back(a);
    // Full reorthogonalization (twice is enough).
    for (int pass = 0; pass < 2; ++pass) w -= Q.leftCols(j + 1) * (Q.leftCols(j + 1).transpose() * w);
    const double b = w.norm();

    const int m = j + 1;
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      T(i, i) = alpha[i];
      if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    const double theta = es.eigenvalues()[m - 1];
    const Eigen::VectorXd s = es.eigenvectors().col(m - 1);
    const double residual = std::abs(b * s[m - 1]);

    result.value = theta;
    result.residual = residual;
    result.steps = m;
    const bool exhausted = b <= 1e-13 * std::max(1.0, std::abs(theta)) || m == max_steps;
    if (residual <= options.tol * std::max(std::abs(theta), 1e-300) || exhausted) {
      result.vector = Q.leftCols(m) * s;
      result.vector.normalize();
      if (exhausted && b <= 1e-13 * std::max(1.0, std::abs(theta))) result.residual = 0.0;
      return result;
    }
    beta.push_back(b);
    q = w / b;
  }
  return result;
}

}  // namespace graphsig
