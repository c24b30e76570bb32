#pragma once

#include <Eigen/Core>

#include <functional>
#include <string>

namespace graphsig {

/// A spectral kernel g: [0, lmax] -> R, applied element-wise to eigenvalues.
class Kernel {
 public:
  using Function = std::function<double(double)>;

  Kernel(Function fn, std::string label = "custom");

  double operator()(double x) const { return fn_(x); }
  Eigen::ArrayXd operator()(const Eigen::ArrayXd& x) const;
  const std::string& label() const noexcept { return label_; }

 private:
  Function fn_;
  std::string label_;
};

}  // namespace graphsig
