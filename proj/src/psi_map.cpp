#include "fracstab/psi_map.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fracstab {

PsiMap psi_identity() {
  return {"identity", [](double t) { return t; }, [](double) { return 1.0; },
          -std::numeric_limits<double>::infinity()};
}

PsiMap psi_log() {
  return {"log", [](double t) { return std::log(t); },
          [](double t) { return 1.0 / t; }, 0.0};
}

PsiMap psi_power(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  return {"power", [sigma](double t) { return std::pow(t, sigma); },
          [sigma](double t) { return sigma * std::pow(t, sigma - 1.0); }, 0.0};
}

PsiMap psi_exp() {
  return {"exp", [](double t) { return std::exp(t); },
          [](double t) { return std::exp(t); },
          -std::numeric_limits<double>::infinity()};
}

PsiMap psi_from_key(const std::string& key, double sigma) {
  if (key == "identity") return psi_identity();
  if (key == "log") return psi_log();
  if (key == "power") return psi_power(sigma);
  if (key == "exp") return psi_exp();
  throw std::invalid_argument("psi must be one of identity, log, power, exp");
}

void validate_psi_on_segment(const PsiMap& psi, const TimeGrid& grid) {
  const int m = grid.t0_index();
  if (!(grid.node(m) > psi.domain_min))
    throw std::invalid_argument("psi domain does not cover [t0, T]");
  double prev = psi.eval(grid.node(m));
  if (!std::isfinite(prev))
    throw std::invalid_argument("psi not finite on grid");
  for (int i = m; i < grid.node_count(); ++i) {
    const double t = grid.node(i);
    const double v = psi.eval(t);
    if (!std::isfinite(v)) throw std::invalid_argument("psi not finite on grid");
    if (i > m && !(v > prev))
      throw std::invalid_argument("psi not strictly increasing on grid");
    if (!(psi.deriv(t) > 0.0))
      throw std::invalid_argument("psi derivative not positive on grid");
    prev = v;
  }
}

double psi_deriv_inconsistency(const PsiMap& psi, double lo, double hi, int n) {
  const double h = (hi - lo) / n;
  const double step = h * 1e-2;  // small central-difference step
  double worst = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = lo + i * h;
    const double fd = (psi.eval(t + step) - psi.eval(t - step)) / (2.0 * step);
    const double d = psi.deriv(t);
    worst = std::max(worst, std::abs(fd - d) / std::max(1e-30, std::abs(d)));
  }
  return worst;
}

}  // namespace fracstab
