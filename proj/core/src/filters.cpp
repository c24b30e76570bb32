#include "graphsig/filters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "graphsig/chebyshev.hpp"
#include "graphsig/error.hpp"
#include "graphsig/io.hpp"
#include "graphsig/spectral.hpp"

namespace graphsig {
namespace {

void check_lmax(double lmax) {
  if (!(lmax > 0.0) || !std::isfinite(lmax))
    throw Error(ErrorCode::BadParameter, "filter design needs a positive finite lmax");
}

void check_count(int n, const char* what) {
  if (n < 1) throw Error(ErrorCode::BadParameter, std::string(what) + " must be at least 1");
}

double itersine_window(double y) {
  if (y < -0.5 || y > 0.5) return 0.0;
  const double c = std::cos(std::numbers::pi * y);
  return std::sin(0.5 * std::numbers::pi * c * c);
}

// Overlap-2 itersine translates on [0, lmax]; with M = 1 the single kernel is all-pass.
std::vector<Kernel> itersine_kernels(double lmax, int m) {
  std::vector<Kernel> out;
  if (m == 1) {
    out.emplace_back([](double) { return 1.0; }, "itersine_0");
    return out;
  }
  const double scale = 2.0 * lmax / (m - 1);
  for (int i = 0; i < m; ++i)
    out.emplace_back([scale, i](double x) { return itersine_window(x / scale - 0.5 * i); },
                     "itersine_" + std::to_string(i));
  return out;
}

std::shared_ptr<const SpectralData> require_basis(const Graph& g) {
  auto sd = fourier_basis(g);
  if (!sd) throw Error(ErrorCode::MissingFourierBasis, "exact filtering needs compute_fourier_basis");
  return sd;
}

std::vector<ChebyshevCoeffs> bank_coeffs(const FilterBank& fb, int order, double lmax) {
  std::vector<ChebyshevCoeffs> out;
  out.reserve(fb.size());
  for (const auto& k : fb.kernels()) out.push_back(chebyshev_coeffs(k, order, lmax));
  return out;
}

double param(const BankDescriptor& d, const std::string& key) {
  const auto it = d.params.find(key);
  if (it == d.params.end())
    throw Error(ErrorCode::BadParameter, "descriptor of kind '" + d.kind + "' lacks '" + key + "'");
  return it->second;
}

}  // namespace

FilterBank::FilterBank(std::vector<Kernel> kernels, BankDescriptor descriptor)
    : kernels_(std::move(kernels)), descriptor_(std::move(descriptor)) {
  if (kernels_.empty()) throw Error(ErrorCode::BadParameter, "a filter bank needs at least one kernel");
}

Eigen::MatrixXd FilterBank::evaluate(const Eigen::VectorXd& x) const {
  Eigen::MatrixXd out(x.size(), size());
  for (int k = 0; k < size(); ++k) out.col(k) = kernels_[k](x.array()).matrix();
  return out;
}

Eigen::VectorXd FilterBank::frame_sum(const Eigen::VectorXd& x) const {
  return evaluate(x).rowwise().squaredNorm();
}

FilterBank design_identity(double lmax) {
  check_lmax(lmax);
  return FilterBank({Kernel([](double) { return 1.0; }, "identity")}, {"identity", lmax, {}, {}});
}

FilterBank design_heat(double lmax, double tau) {
  check_lmax(lmax);
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw Error(ErrorCode::BadParameter, "tau must be >= 0");
  return FilterBank({Kernel([lmax, tau](double x) { return std::exp(-tau * x / lmax); }, "heat")},
                    {"heat", lmax, {{"tau", tau}}, {}});
}

FilterBank design_mexican_hat(double lmax, int num_scales) {
  check_lmax(lmax);
  check_count(num_scales, "number of scales");
  const double lmin = lmax / 20.0;
  std::vector<Kernel> kernels;
  kernels.emplace_back(
      [lmin](double x) {
        const double r = x / lmin;
        return 1.2 * std::exp(-1.0) * std::exp(-r * r);
      },
      "mexican_hat_lowpass");
  const double t_hi = std::log(20.0 / lmax), t_lo = std::log(2.0 / lmax);
  for (int j = 0; j < num_scales; ++j) {
    const double frac = num_scales == 1 ? 0.5 : static_cast<double>(j) / (num_scales - 1);
    const double t = std::exp(t_hi + frac * (t_lo - t_hi));
    kernels.emplace_back([t](double x) { return t * x * std::exp(-t * x); },
                         "mexican_hat_" + std::to_string(j));
  }
  return FilterBank(std::move(kernels),
                    {"mexican_hat", lmax, {{"scales", static_cast<double>(num_scales)}}, {}});
}

FilterBank design_itersine(double lmax, int num_filters) {
  check_lmax(lmax);
  check_count(num_filters, "number of filters");
  return FilterBank(itersine_kernels(lmax, num_filters),
                    {"itersine", lmax, {{"filters", static_cast<double>(num_filters)}}, {}});
}

FilterBank design_regular_hp_lp(double lmax, int degree) {
  check_lmax(lmax);
  if (degree < 0) throw Error(ErrorCode::BadParameter, "degree must be >= 0");
  auto angle = [lmax, degree](double x) {
    double p = std::clamp(2.0 * x / lmax - 1.0, -1.0, 1.0);
    for (int i = 0; i < degree; ++i) p = std::sin(0.5 * std::numbers::pi * p);
    return 0.25 * std::numbers::pi * (1.0 + p);
  };
  std::vector<Kernel> kernels;
  kernels.emplace_back([angle](double x) { return std::cos(angle(x)); }, "regular_lowpass");
  kernels.emplace_back([angle](double x) { return std::sin(angle(x)); }, "regular_highpass");
  return FilterBank(std::move(kernels),
                    {"regular_hp_lp", lmax, {{"degree", static_cast<double>(degree)}}, {}});
}

FilterBank design_gabor(double lmax, int num_filters, std::optional<Kernel> mother) {
  check_lmax(lmax);
  check_count(num_filters, "number of filters");
  BankDescriptor desc{"gabor", lmax, {{"filters", static_cast<double>(num_filters)}}, {}};
  if (!mother) {
    const double width = lmax / num_filters;
    mother = Kernel([width](double x) { return std::exp(-x * x / (2.0 * width * width)); }, "gaussian");
  } else {
    desc.kind = "custom";
  }
  std::vector<Kernel> kernels;
  for (int k = 0; k < num_filters; ++k) {
    const double centre = num_filters == 1 ? 0.0 : lmax * k / (num_filters - 1);
    kernels.emplace_back([m = *mother, centre](double x) { return m(x - centre); },
                         "gabor_" + std::to_string(k));
  }
  return FilterBank(std::move(kernels), std::move(desc));
}

FilterBank design_expwin(double lmax, double band) {
  check_lmax(lmax);
  if (!(band > 0.0 && band <= 1.0)) throw Error(ErrorCode::BadParameter, "band must lie in (0, 1]");
  const double cutoff = band * lmax;
  auto bump = [](double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; };
  return FilterBank({Kernel(
                        [cutoff, bump](double x) {
                          if (x <= 0.0) return 1.0;
                          if (x >= cutoff) return 0.0;
                          const double t = x / cutoff;
                          const double a = bump(1.0 - t), b = bump(t);
                          return a / (a + b);
                        },
                        "expwin")},
                    {"expwin", lmax, {{"band", band}}, {}});
}

FilterBank warped_translates(std::span<const double> eigenvalues, int num_filters) {
  check_count(num_filters, "number of filters");
  std::vector<double> e(eigenvalues.begin(), eigenvalues.end());
  if (e.size() < 2) throw Error(ErrorCode::BadParameter, "warping needs at least two eigenvalues");
  std::sort(e.begin(), e.end());
  const double lmax = e.back();
  check_lmax(lmax);

  // Empirical CDF knots: one per distinct eigenvalue, at its mean rank.
  const double tol = 1e-10 * std::max(1.0, lmax);
  std::vector<double> xs, ys;
  const double denom = static_cast<double>(e.size() - 1);
  for (std::size_t first = 0; first < e.size();) {
    std::size_t last = first + 1;
    while (last < e.size() && e[last] - e[last - 1] <= tol) ++last;
    xs.push_back(e[first]);
    ys.push_back(0.5 * (first + last - 1) / denom);
    first = last;
  }
  if (xs.size() < 2) throw Error(ErrorCode::BadParameter, "warping needs two distinct eigenvalues");
  const double y0 = ys.front(), y1 = ys.back();
  for (auto& y : ys) y = (y - y0) / (y1 - y0);
  ys.front() = 0.0;
  ys.back() = 1.0;

  auto warp = [xs, ys](double x) {
    if (x <= xs.front()) return 0.0;
    if (x >= xs.back()) return 1.0;
    const auto hi = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
    const auto lo = hi - 1;
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + t * (ys[hi] - ys[lo]);
  };

  std::vector<Kernel> kernels;
  for (const auto& window : itersine_kernels(1.0, num_filters))
    kernels.emplace_back([window, warp](double x) { return window(warp(x)); },
                         "warped_" + window.label());
  return FilterBank(std::move(kernels), {"warped_translates",
                                         lmax,
                                         {{"filters", static_cast<double>(num_filters)}},
                                         std::vector<double>(eigenvalues.begin(), eigenvalues.end())});
}

FilterBank warped_translates(const Graph& g, int num_filters) {
  const auto sd = require_basis(g);
  return warped_translates(std::span<const double>(sd->e.data(), sd->e.size()), num_filters);
}

FilterBank design(const BankDescriptor& d) {
  auto as_int = [&](const std::string& key) { return static_cast<int>(param(d, key)); };
  if (d.kind == "identity") return design_identity(d.lmax);
  if (d.kind == "heat") return design_heat(d.lmax, param(d, "tau"));
  if (d.kind == "mexican_hat") return design_mexican_hat(d.lmax, as_int("scales"));
  if (d.kind == "itersine") return design_itersine(d.lmax, as_int("filters"));
  if (d.kind == "regular_hp_lp") return design_regular_hp_lp(d.lmax, as_int("degree"));
  if (d.kind == "gabor") return design_gabor(d.lmax, as_int("filters"));
  if (d.kind == "expwin") return design_expwin(d.lmax, param(d, "band"));
  if (d.kind == "warped_translates") return warped_translates(d.eigenvalues, as_int("filters"));
  throw Error(ErrorCode::NotSerializable, "filter bank kind '" + d.kind + "' cannot be rebuilt");
}

Eigen::MatrixXd filter_analysis(const Graph& g, const FilterBank& fb, const Eigen::MatrixXd& f,
                                FilterMethod method) {
  if (f.rows() != g.N())
    throw Error(ErrorCode::ShapeMismatch, "signal rows do not match the vertex count");
  const Eigen::Index k = f.cols();
  if (method.kind == FilterMethod::Kind::Exact) {
    const auto sd = require_basis(g);
    const Eigen::MatrixXd fhat = sd->U.transpose() * f;
    Eigen::MatrixXd out(g.N(), fb.size() * k);
    for (int j = 0; j < fb.size(); ++j) {
      const Eigen::VectorXd response = fb[j](sd->e.array()).matrix();
      out.middleCols(j * k, k) = sd->U * (response.asDiagonal() * fhat);
    }
    return out;
  }
  const auto coeffs = bank_coeffs(fb, method.order, graph_lmax(g));
  return chebyshev_apply_bank(g.L(), coeffs, f);
}

Eigen::MatrixXd filter_synthesis(const Graph& g, const FilterBank& fb, const Eigen::MatrixXd& coefficients,
                                 FilterMethod method) {
  if (coefficients.rows() != g.N() || coefficients.cols() % fb.size() != 0)
    throw Error(ErrorCode::ShapeMismatch, "coefficients must be N x (filters * k)");
  const Eigen::Index k = coefficients.cols() / fb.size();
  if (method.kind == FilterMethod::Kind::Exact) {
    const auto sd = require_basis(g);
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(g.N(), k);
    for (int j = 0; j < fb.size(); ++j) {
      const Eigen::VectorXd response = fb[j](sd->e.array()).matrix();
      acc += response.asDiagonal() * (sd->U.transpose() * coefficients.middleCols(j * k, k));
    }
    return sd->U * acc;
  }
  const double lmax = graph_lmax(g);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(g.N(), k);
  for (int j = 0; j < fb.size(); ++j)
    out += chebyshev_apply(g.L(), chebyshev_coeffs(fb[j], method.order, lmax),
                           coefficients.middleCols(j * k, k));
  return out;
}

FrameBounds frame_bounds(const FilterBank& fb, double lmax, int grid_size) {
  if (grid_size < 2) throw Error(ErrorCode::BadParameter, "grid_size must be at least 2");
  const Eigen::VectorXd grid = Eigen::VectorXd::LinSpaced(grid_size, 0.0, lmax);
  const Eigen::VectorXd s = fb.frame_sum(grid);
  return {s.minCoeff(), s.maxCoeff(), std::nullopt, std::nullopt};
}

FrameBounds frame_bounds(const Graph& g, const FilterBank& fb, int grid_size) {
  FrameBounds out = frame_bounds(fb, graph_lmax(g), grid_size);
  if (auto sd = fourier_basis(g)) {
    const Eigen::VectorXd s = fb.frame_sum(sd->e);
    out.A_exact = s.minCoeff();
    out.B_exact = s.maxCoeff();
  }
  return out;
}

std::string filter_curves_csv(const FilterBank& fb, double lmax, int grid_size) {
  if (grid_size < 2) throw Error(ErrorCode::BadParameter, "grid_size must be at least 2");
  const Eigen::VectorXd grid = Eigen::VectorXd::LinSpaced(grid_size, 0.0, lmax);
  const Eigen::MatrixXd values = fb.evaluate(grid);
  std::ostringstream out;
  for (int i = 0; i < grid_size; ++i) {
    out << io::format_double(grid[i]);
    for (int k = 0; k < fb.size(); ++k) out << ',' << io::format_double(values(i, k));
    out << ',' << io::format_double(values.row(i).squaredNorm()) << '\n';
  }
  return out.str();
}

}  // namespace graphsig
