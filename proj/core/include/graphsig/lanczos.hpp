#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>

namespace graphsig {

/// y = A x for a symmetric operator A.
using LinearOperator = std::function<void(const Eigen::VectorXd& x, Eigen::VectorXd& y)>;

struct LanczosOptions {
  int max_steps = 150;
  /// Stop once the top Ritz pair residual falls below tol * |theta|.
  double tol = 1e-8;
  std::uint64_t seed = 0x5eed;
};

struct LanczosResult {
  double value = 0.0;      // largest Ritz value
  Eigen::VectorXd vector;  // matching unit Ritz vector
  double residual = 0.0;   // ||A v - value v||
  int steps = 0;
};

/// Largest eigenpair of a symmetric operator by Lanczos with full
/// reorthogonalization. The start vector is drawn from `seed`.
LanczosResult lanczos_largest(const LinearOperator& apply, int n, const LanczosOptions& options = {});

}  // namespace graphsig
