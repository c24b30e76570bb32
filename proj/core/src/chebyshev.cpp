#include "graphsig/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "graphsig/error.hpp"

namespace graphsig {

double ChebyshevCoeffs::evaluate(double x) const {
  const double y = lmax > 0.0 ? 2.0 * x / lmax - 1.0 : -1.0;
  // Clenshaw
  double b1 = 0.0, b2 = 0.0;
  for (int k = order; k >= 1; --k) {
    const double b0 = c[k] + 2.0 * y * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return 0.5 * c[0] + y * b1 - b2;
}

ChebyshevCoeffs chebyshev_coeffs(const Kernel& kernel, int order, double lmax) {
  if (order < 1) throw Error(ErrorCode::BadParameter, "Chebyshev order must be at least 1");
  if (!(lmax >= 0.0) || !std::isfinite(lmax))
    throw Error(ErrorCode::BadParameter, "lmax must be finite and non-negative");
  const int nodes = order + 1;
  Eigen::VectorXd samples(nodes), theta(nodes);
  for (int j = 0; j < nodes; ++j) {
    theta[j] = std::numbers::pi * (j + 0.5) / nodes;
    samples[j] = kernel(0.5 * lmax * (std::cos(theta[j]) + 1.0));
  }
  ChebyshevCoeffs out;
  out.order = order;
  out.lmax = lmax;
  out.c.resize(nodes);
  for (int k = 0; k < nodes; ++k) {
    double acc = 0.0;
    for (int j = 0; j < nodes; ++j) acc += samples[j] * std::cos(k * theta[j]);
    out.c[k] = 2.0 / nodes * acc;
  }
  return out;
}

Eigen::MatrixXd chebyshev_apply_bank(const SparseMatrix& L, std::span<const ChebyshevCoeffs> bank,
                                     const Eigen::MatrixXd& f) {
  if (f.rows() != L.rows())
    throw Error(ErrorCode::ShapeMismatch, "signal has " + std::to_string(f.rows()) +
                                              " rows, operator has " + std::to_string(L.rows()));
  const Eigen::Index k = f.cols();
  const int nf = static_cast<int>(bank.size());
  Eigen::MatrixXd out(f.rows(), nf * k);
  if (nf == 0) return out;
  const double lmax = bank[0].lmax;
  int max_order = 0;
  for (const auto& c : bank) {
    if (c.lmax != lmax) throw Error(ErrorCode::BadParameter, "bank expansions disagree on lmax");
    max_order = std::max(max_order, c.order);
  }
  if (lmax <= 0.0) {
    for (int j = 0; j < nf; ++j) out.middleCols(j * k, k) = bank[j].evaluate(0.0) * f;
    return out;
  }

  // Shifted operator (2/lmax) L - I maps the spectrum into [-1, 1].
  const double a = 2.0 / lmax;
  auto shifted = [&](const Eigen::MatrixXd& x) -> Eigen::MatrixXd { return a * (L * x) - x; };

  Eigen::MatrixXd t_prev = f;
  Eigen::MatrixXd t_curr = shifted(f);
  for (int j = 0; j < nf; ++j) {
    out.middleCols(j * k, k) = 0.5 * bank[j].c[0] * t_prev;
    if (bank[j].order >= 1) out.middleCols(j * k, k) += bank[j].c[1] * t_curr;
  }
  for (int order = 2; order <= max_order; ++order) {
    Eigen::MatrixXd t_next = 2.0 * shifted(t_curr) - t_prev;
    for (int j = 0; j < nf; ++j)
      if (bank[j].order >= order) out.middleCols(j * k, k) += bank[j].c[order] * t_next;
    t_prev = std::move(t_curr);
    t_curr = std::move(t_next);
  }
  return out;
}

Eigen::MatrixXd chebyshev_apply(const SparseMatrix& L, const ChebyshevCoeffs& coeffs,
                                const Eigen::MatrixXd& f) {
  return chebyshev_apply_bank(L, std::span<const ChebyshevCoeffs>(&coeffs, 1), f);
}

Eigen::MatrixXd chebyshev_apply(const Graph& g, const ChebyshevCoeffs& coeffs, const Eigen::MatrixXd& f) {
  return chebyshev_apply(g.L(), coeffs, f);
}

}  // namespace graphsig
