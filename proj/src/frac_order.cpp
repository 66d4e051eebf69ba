#include "fracstab/frac_order.hpp"

#include <stdexcept>

namespace fracstab {

FracOrder::FracOrder(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("alpha must lie in (0,1]");
  if (!(beta >= 0.0) || beta > 1.0)
    throw std::invalid_argument("beta must lie in [0,1]");
  gamma_ = alpha + beta * (1.0 - alpha);
}

}  // namespace fracstab
