#pragma once

#include <Eigen/Core>

#include <span>

#include "graphsig/graph.hpp"
#include "graphsig/kernel.hpp"

namespace graphsig {

/// Chebyshev expansion of a kernel on [0, lmax]:
///   g(x) ~ c_0 / 2 + sum_{k>=1} c_k T_k(2x/lmax - 1).
struct ChebyshevCoeffs {
  int order = 0;
  Eigen::VectorXd c;
  double lmax = 0.0;

  double evaluate(double x) const;
};

/// Interpolation coefficients from the order+1 Chebyshev nodes.
ChebyshevCoeffs chebyshev_coeffs(const Kernel& kernel, int order, double lmax);

/// g(L) f by the three-term recurrence; L is never diagonalized.
Eigen::MatrixXd chebyshev_apply(const SparseMatrix& L, const ChebyshevCoeffs& coeffs,
                                const Eigen::MatrixXd& f);
Eigen::MatrixXd chebyshev_apply(const Graph& g, const ChebyshevCoeffs& coeffs, const Eigen::MatrixXd& f);

/// Several expansions sharing one recurrence. All sets must have the same
/// lmax. Output blocks are stacked kernel-major: [g_0(L) f, g_1(L) f, ...].
Eigen::MatrixXd chebyshev_apply_bank(const SparseMatrix& L, std::span<const ChebyshevCoeffs> bank,
                                     const Eigen::MatrixXd& f);

}  // namespace graphsig
