#include "graphsig/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphsig/diff.hpp"
#include "graphsig/error.hpp"
#include "graphsig/lanczos.hpp"
#include "graphsig/spectral.hpp"

namespace graphsig {
namespace {

// Monotone FISTA with restart. `step(w)` returns the proximal gradient step
// from w, `objective` the full objective and `residual(x, z, w)` the stopping
// measure. Iteration stops once residual <= tol.
template <class Var, class Step, class Objective, class Residual>
SolverReport mfista(Var& x, const SolverOptions& options, Step step, Objective objective, Residual residual) {
  SolverReport report;
  double fx = objective(x);
  Var w = x;
  double t = 1.0;
  for (int k = 0; k < options.max_iter; ++k) {
    const Var z = step(w);
    const Var w_used = w;
    const double fz = objective(z);
    const bool improved = fz <= fx;
    const Var x_prev = x;
    if (improved) {
      x = z;
      fx = fz;
    }
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    if (improved) {
      w = x + (t / t_next) * (z - x) + ((t - 1.0) / t_next) * (x - x_prev);
      t = t_next;
    } else {
      w = x;
      t = 1.0;
    }
    report.iterations = k + 1;
    report.objective_history.push_back(fx);
    report.residual = residual(x, z, w_used);
    if (report.residual <= options.tol) {
      report.converged = true;
      break;
    }
  }
  report.objective = fx;
  return report;
}

void check_options(const SolverOptions& options) {
  if (options.max_iter < 1 || !(options.tol > 0.0))
    throw Error(ErrorCode::BadParameter, "max_iter must be >= 1 and tol > 0");
}

void check_signal(const Graph& g, const Eigen::VectorXd& y) {
  if (y.size() != g.N()) throw Error(ErrorCode::ShapeMismatch, "signal length does not match the vertex count");
  if (!y.allFinite()) throw Error(ErrorCode::NonFinite, "signal contains non-finite values");
}

double squared_operator_norm(const SparseMatrix& D) {
  const Eigen::Index n = D.cols();
  LanczosOptions opts;
  opts.max_steps = static_cast<int>(std::min<Eigen::Index>(n, 300));
  const auto r = lanczos_largest(
      [&D](const Eigen::VectorXd& v, Eigen::VectorXd& out) { out = D.transpose() * (D * v); },
      static_cast<int>(n), opts);
  return 1.01 * r.value;
}

}  // namespace

Eigen::MatrixXd soft_threshold(const Eigen::MatrixXd& c, double tau) {
  return c.unaryExpr([tau](double v) { return v > tau ? v - tau : (v < -tau ? v + tau : 0.0); });
}

ProxTvResult prox_tv(const Graph& g, const Eigen::VectorXd& y, double gamma, const SolverOptions& options) {
  check_signal(g, y);
  check_options(options);
  if (!(gamma > 0.0)) throw Error(ErrorCode::BadParameter, "gamma must be positive");

  const auto inc = adj2vec(g);
  const SparseMatrix& D = inc->gradient;
  ProxTvResult result;
  result.dual = Eigen::VectorXd::Zero(inc->num_edges());
  const Eigen::VectorXd Dy = D * y;
  if (inc->num_edges() == 0 || Dy.lpNorm<Eigen::Infinity>() == 0.0) {
    result.x = y;
    result.report.converged = true;
    result.report.objective_history.push_back(0.0);
    return result;
  }

  const double lipschitz = squared_operator_norm(D);
  const double step = 1.0 / lipschitz;
  auto primal_of = [&](const Eigen::VectorXd& p) -> Eigen::VectorXd { return y - D.transpose() * p; };
  auto dual_objective = [&](const Eigen::VectorXd& p) { return 0.5 * primal_of(p).squaredNorm(); };
  auto step_fn = [&](const Eigen::VectorXd& w) -> Eigen::VectorXd {
    return (w + step * (D * primal_of(w))).cwiseMax(-gamma).cwiseMin(gamma);
  };
  double primal_value = 0.0;
  auto gap_fn = [&](const Eigen::VectorXd& p, const Eigen::VectorXd&, const Eigen::VectorXd&) {
    const Eigen::VectorXd x = primal_of(p);
    const Eigen::VectorXd Dx = D * x;
    const double tv = Dx.lpNorm<1>();
    primal_value = 0.5 * (x - y).squaredNorm() + gamma * tv;
    const double gap = std::max(0.0, gamma * tv - p.dot(Dx));
    return gap / (1.0 + std::abs(primal_value));
  };

  Eigen::VectorXd p = result.dual;
  result.report = mfista(p, options, step_fn, dual_objective, gap_fn);
  result.dual = p;
  result.x = primal_of(p);
  result.report.objective = primal_value;
  return result;
}

DenoiseResult tik_denoise(const Graph& g, const Eigen::VectorXd& y, double gamma, double tol, int max_iter) {
  check_signal(g, y);
  if (!(gamma >= 0.0)) throw Error(ErrorCode::BadParameter, "gamma must be non-negative");
  if (!(tol > 0.0)) throw Error(ErrorCode::BadParameter, "tol must be positive");
  const SparseMatrix& L = g.L();
  if ((L - SparseMatrix(L.transpose())).norm() > 1e-12 * std::max(1.0, L.norm()))
    throw Error(ErrorCode::NonSymmetricLaplacian, "tik_denoise needs a symmetric Laplacian");
  const int n = g.N();
  if (max_iter <= 0) max_iter = 10 * n + 100;

  auto apply = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd { return v + 2.0 * gamma * (L * v); };
  auto objective = [&](const Eigen::VectorXd& x) {
    return 0.5 * (x - y).squaredNorm() + gamma * x.dot(L * x);
  };
  const Eigen::VectorXd inv_diag =
      (Eigen::VectorXd::Ones(n) + 2.0 * gamma * L.diagonal()).cwiseInverse();

  DenoiseResult result;
  result.x = Eigen::VectorXd::Zero(n);
  SolverReport& report = result.report;
  const double ynorm = y.norm();
  if (ynorm == 0.0) {
    report.converged = true;
    report.objective_history.push_back(0.0);
    return result;
  }
  Eigen::VectorXd r = y;
  Eigen::VectorXd z = inv_diag.cwiseProduct(r);
  Eigen::VectorXd p = z;
  double rz = r.dot(z);
  for (int k = 0; k < max_iter; ++k) {
    const Eigen::VectorXd Ap = apply(p);
    const double pAp = p.dot(Ap);
    if (!(pAp > 0.0) || !std::isfinite(pAp))
      throw Error(ErrorCode::SolverFailure, "conjugate gradient breakdown");
    const double a = rz / pAp;
    result.x += a * p;
    r -= a * Ap;
    report.iterations = k + 1;
    report.objective_history.push_back(objective(result.x));
    report.residual = r.norm() / ynorm;
    if (report.residual <= tol) {
      report.converged = true;
      break;
    }
    z = inv_diag.cwiseProduct(r);
    const double rz_next = r.dot(z);
    p = z + (rz_next / rz) * p;
    rz = rz_next;
  }
  report.objective = report.objective_history.back();
  return result;
}

DenoiseResult wavelet_denoise(const Graph& g, const FilterBank& fb, const Eigen::VectorXd& y, double tau,
                              FilterMethod method) {
  check_signal(g, y);
  if (!(tau >= 0.0)) throw Error(ErrorCode::BadParameter, "tau must be non-negative");
  const FrameBounds fr = frame_bounds(g, fb);
  const double A = fr.A_exact ? std::min(*fr.A_exact, fr.A) : fr.A;
  const double B = fr.B_exact ? std::max(*fr.B_exact, fr.B) : fr.B;
  if (B - A > 1e-6 || !(A > 0.0))
    throw Error(ErrorCode::NotTightFrame,
                "frame bounds differ by " + std::to_string(B - A) + "; use solve_bpdn for general banks");
  const Eigen::MatrixXd c = filter_analysis(g, fb, y, method);
  const Eigen::MatrixXd shrunk = soft_threshold(c, tau);
  DenoiseResult result;
  result.x = filter_synthesis(g, fb, shrunk, method).col(0) / A;
  result.report.iterations = 1;
  result.report.objective = 0.5 * (shrunk - c).squaredNorm() + tau * shrunk.cwiseAbs().sum();
  result.report.objective_history.push_back(result.report.objective);
  result.report.converged = true;
  return result;
}

BpdnResult solve_bpdn(const Graph& g, const FilterBank& fb, const Eigen::VectorXd& y,
                      const std::optional<Eigen::VectorXd>& mask, double lambda, const SolverOptions& options,
                      FilterMethod method) {
  check_signal(g, y);
  check_options(options);
  if (!(lambda > 0.0)) throw Error(ErrorCode::BadParameter, "lambda must be positive");
  const int n = g.N();
  Eigen::VectorXd m = Eigen::VectorXd::Ones(n);
  if (mask) {
    if (mask->size() != n) throw Error(ErrorCode::ShapeMismatch, "mask length does not match the vertex count");
    m = mask->unaryExpr([](double v) { return v != 0.0 ? 1.0 : 0.0; });
  }

  const FrameBounds fr = frame_bounds(g, fb);
  const double B = fr.B_exact ? std::max(*fr.B_exact, fr.B) : fr.B;
  if (!(B > 0.0)) throw Error(ErrorCode::BadParameter, "filter bank is identically zero");
  const double step = 1.0 / (1.01 * B);
  const Eigen::VectorXd my = m.cwiseProduct(y);

  auto misfit = [&](const Eigen::MatrixXd& c) -> Eigen::VectorXd {
    return m.cwiseProduct(filter_synthesis(g, fb, c, method).col(0)) - my;
  };
  auto objective = [&](const Eigen::MatrixXd& c) {
    return 0.5 * misfit(c).squaredNorm() + lambda * c.cwiseAbs().sum();
  };
  auto step_fn = [&](const Eigen::MatrixXd& w) -> Eigen::MatrixXd {
    const Eigen::MatrixXd gradient = filter_analysis(g, fb, misfit(w), method);
    return soft_threshold(w - step * gradient, step * lambda);
  };
  auto residual = [&](const Eigen::MatrixXd&, const Eigen::MatrixXd& z, const Eigen::MatrixXd& w) {
    return (z - w).norm() / std::max(1.0, z.norm());
  };

  BpdnResult result;
  result.coefficients = Eigen::MatrixXd::Zero(n, fb.size());
  result.report = mfista(result.coefficients, options, step_fn, objective, residual);
  return result;
}

}  // namespace graphsig
