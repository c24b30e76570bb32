#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "graphsig/filters.hpp"
#include "graphsig/graph.hpp"

namespace graphsig {

struct SolverOptions {
  int max_iter = 1000;
  double tol = 1e-6;
};

struct SolverReport {
  int iterations = 0;
  double objective = 0.0;
  double residual = 0.0;  // solver-specific optimality measure
  bool converged = false;
  std::vector<double> objective_history;  // one entry per iteration
};

struct ProxTvResult {
  Eigen::VectorXd x;
  Eigen::VectorXd dual;  // p with x = y - D^T p and |p|_inf <= gamma
  SolverReport report;
};

/// argmin_x 1/2 |x - y|^2 + gamma |D x|_1 with D the weighted gradient.
/// Solved on the dual box-constrained problem by monotone FISTA with
/// restart; residual is the duality gap. Stops when gap <= tol (1 + |P(x)|).
ProxTvResult prox_tv(const Graph& g, const Eigen::VectorXd& y, double gamma, const SolverOptions& options = {});

struct DenoiseResult {
  Eigen::VectorXd x;
  SolverReport report;
};

/// argmin_x 1/2 |x - y|^2 + gamma x^T L x, i.e. (I + 2 gamma L) x = y, by
/// Jacobi-preconditioned conjugate gradient. Needs a symmetric Laplacian.
/// residual is the relative residual norm; history records the objective.
DenoiseResult tik_denoise(const Graph& g, const Eigen::VectorXd& y, double gamma, double tol = 1e-10,
                          int max_iter = 0);

/// Soft thresholding of the analysis coefficients of a tight frame followed
/// by synthesis / A. Throws NotTightFrame when B - A > 1e-6.
DenoiseResult wavelet_denoise(const Graph& g, const FilterBank& fb, const Eigen::VectorXd& y, double tau,
                              FilterMethod method = {});

struct BpdnResult {
  Eigen::MatrixXd coefficients;  // N x fb.size(), kernel-major like filter_analysis
  SolverReport report;
};

/// argmin_c lambda |c|_1 + 1/2 |M (synthesis(c) - y)|^2 by monotone FISTA
/// with restart. `mask` (1 observed, 0 hidden) defaults to all observed.
BpdnResult solve_bpdn(const Graph& g, const FilterBank& fb, const Eigen::VectorXd& y,
                      const std::optional<Eigen::VectorXd>& mask, double lambda,
                      const SolverOptions& options = {}, FilterMethod method = {});

Eigen::MatrixXd soft_threshold(const Eigen::MatrixXd& c, double tau);

}  // namespace graphsig
