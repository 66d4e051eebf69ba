#include "fracstab/hilfer_derivative.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracstab/rl_quadrature.hpp"

namespace fracstab {

namespace {

Eigen::ArrayXd scaled_derivative(const Eigen::ArrayXd& g, const TimeGrid& grid,
                                 const PsiMap& psi) {
  const int n = static_cast<int>(g.size());
  const double h = grid.h();
  Eigen::ArrayXd d(n);
  d[0] = (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * h);
  d[n - 1] = (3.0 * g[n - 1] - 4.0 * g[n - 2] + g[n - 3]) / (2.0 * h);
  for (int i = 1; i < n - 1; ++i) d[i] = (g[i + 1] - g[i - 1]) / (2.0 * h);
  for (int i = 0; i < n; ++i)
    d[i] /= psi.deriv(grid.node(grid.t0_index() + i));
  return d;
}

}  // namespace

Path psi_hilfer_derivative(const Path& f, const FracOrder& order,
                           const PsiMap& psi) {
  const TimeGrid& grid = f.grid();
  if (grid.main_steps() + 1 < 3)
    throw std::invalid_argument("grid too short for derivative stencil");
  if (!f.finite())
    throw std::invalid_argument("path contains non-finite values");

  Eigen::ArrayXd stage = f.segment_values();
  const double e_inner = order.inner_exponent();
  const double e_outer = order.outer_exponent();
  if (e_inner > 0.0)
    stage = RlQuadrature(grid, e_inner, psi).apply(stage);
  stage = scaled_derivative(stage, grid, psi);
  if (e_outer > 0.0)
    stage = RlQuadrature(grid, e_outer, psi).apply(stage);

  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(grid.node_count());
  out.tail(grid.main_steps() + 1) = stage;
  return Path(f.grid_ptr(), std::move(out));
}

double weighted_sup_norm(const Path& f, const FracOrder& order,
                         const PsiMap& psi) {
  const TimeGrid& grid = f.grid();
  const double u0 = psi.eval(grid.t0());
  double sup = 0.0;
  for (int i = grid.t0_index(); i < grid.node_count(); ++i) {
    const double w = pow_frac(psi.eval(grid.node(i)) - u0, 1.0 - order.gamma());
    sup = std::max(sup, w * std::abs(f[i]));
  }
  return sup;
}

double roundtrip_residual(const Path& f, const FracOrder& order,
                          const PsiMap& psi) {
  const Path integ = rl_integral(f, order.alpha(), psi);
  const Path deriv = psi_hilfer_derivative(integ, order, psi);
  const Eigen::ArrayXd diff =
      (deriv.segment_values() - f.segment_values()).abs();
  const int n = static_cast<int>(diff.size());
  if (n <= 2) return 0.0;
  return diff.tail(n - 2).maxCoeff();
}

}  // namespace fracstab
