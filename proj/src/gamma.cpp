#include "fracstab/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace fracstab {

double gamma_fn(double x) {
  if (!(x > 0.0) || x > 20.0)
    throw std::domain_error("gamma_fn: argument must lie in (0, 20]");
  return std::tgamma(x);
}

}  // namespace fracstab
