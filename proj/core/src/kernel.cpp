#include "graphsig/kernel.hpp"

#include "graphsig/error.hpp"

namespace graphsig {

Kernel::Kernel(Function fn, std::string label) : fn_(std::move(fn)), label_(std::move(label)) {
  if (!fn_) throw Error(ErrorCode::BadParameter, "kernel needs a callable");
}

Eigen::ArrayXd Kernel::operator()(const Eigen::ArrayXd& x) const {
  return x.unaryExpr([this](double v) { return fn_(v); });
}

}  // namespace graphsig
