#pragma once

#include <Eigen/Core>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphsig/graph.hpp"
#include "graphsig/kernel.hpp"

namespace graphsig {

/// Design recipe of a filter bank: enough to rebuild it exactly.
struct BankDescriptor {
  std::string kind = "custom";
  double lmax = 0.0;
  std::map<std::string, double> params;
  std::vector<double> eigenvalues;  // warped_translates only
};

/// Ordered collection of kernels sharing the domain [0, lmax].
class FilterBank {
 public:
  FilterBank(std::vector<Kernel> kernels, BankDescriptor descriptor = {});

  int size() const noexcept { return static_cast<int>(kernels_.size()); }
  const Kernel& operator[](int i) const { return kernels_.at(i); }
  const std::vector<Kernel>& kernels() const noexcept { return kernels_; }
  const BankDescriptor& descriptor() const noexcept { return descriptor_; }

  /// x.size() x size() matrix of kernel responses.
  Eigen::MatrixXd evaluate(const Eigen::VectorXd& x) const;
  /// sum_k g_k(x)^2 at each x.
  Eigen::VectorXd frame_sum(const Eigen::VectorXd& x) const;

 private:
  std::vector<Kernel> kernels_;
  BankDescriptor descriptor_;
};

// Designs. lmax must be positive.

/// Single all-pass kernel g = 1.
FilterBank design_identity(double lmax);
/// exp(-tau x / lmax).
FilterBank design_heat(double lmax, double tau);
/// Low-pass companion followed by `num_scales` band-pass kernels
/// nu(t_j x), nu(x) = x exp(-x), t_j log-spaced from 20/lmax down to 2/lmax.
FilterBank design_mexican_hat(double lmax, int num_scales);
/// Uniform translates of sin(pi/2 cos^2(pi y)) with overlap 2; a tight
/// frame (sum g_k^2 = 1) on [0, lmax].
FilterBank design_itersine(double lmax, int num_filters);
/// Low-pass / high-pass pair with lp^2 + hp^2 = 1. `degree` is the number of
/// smoothing iterations of the transition.
FilterBank design_regular_hp_lp(double lmax, int degree = 3);
/// Shifts of a mother window to `num_filters` uniform centres on [0, lmax].
/// Default mother: Gaussian of width lmax / num_filters.
FilterBank design_gabor(double lmax, int num_filters, std::optional<Kernel> mother = std::nullopt);
/// Smooth low-pass equal to 1 at 0 and 0 from band * lmax on.
FilterBank design_expwin(double lmax, double band);

/// Translates adapted to the spectral distribution: itersine windows on
/// [0, 1] composed with the piecewise-linear empirical spectral CDF.
FilterBank warped_translates(const Graph& g, int num_filters);
FilterBank warped_translates(std::span<const double> eigenvalues, int num_filters);

/// Rebuilds a designed bank from its descriptor. Custom banks cannot be rebuilt.
FilterBank design(const BankDescriptor& descriptor);

struct FilterMethod {
  enum class Kind { Exact, Chebyshev };
  Kind kind = Kind::Chebyshev;
  int order = 30;

  static FilterMethod exact() { return {Kind::Exact, 0}; }
  static FilterMethod chebyshev(int order = 30) { return {Kind::Chebyshev, order}; }
};

/// Per-kernel filtered signals stacked kernel-major: for an N x k input the
/// output is N x (size() * k) with kernel j in columns [j k, (j+1) k).
Eigen::MatrixXd filter_analysis(const Graph& g, const FilterBank& fb, const Eigen::MatrixXd& f,
                                FilterMethod method = {});
/// Adjoint of filter_analysis: sum_j g_j(L) c_j.
Eigen::MatrixXd filter_synthesis(const Graph& g, const FilterBank& fb, const Eigen::MatrixXd& coefficients,
                                 FilterMethod method = {});

struct FrameBounds {
  double A = 0.0;
  double B = 0.0;
  std::optional<double> A_exact;  // over the graph eigenvalues
  std::optional<double> B_exact;
};

/// Min/max of sum_k g_k^2 over a uniform grid on [0, lmax].
FrameBounds frame_bounds(const FilterBank& fb, double lmax, int grid_size = 1000);
/// Grid bounds on [0, graph lmax], plus eigenvalue-exact bounds when the
/// Fourier basis is cached.
FrameBounds frame_bounds(const Graph& g, const FilterBank& fb, int grid_size = 1000);

/// "x,g_0(x),g_1(x),...,sum g^2" per grid point.
std::string filter_curves_csv(const FilterBank& fb, double lmax, int grid_size);

}  // namespace graphsig
