#include "fracstab/rl_quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "fracstab/gamma.hpp"

namespace fracstab {

double pow_frac(double base, double expo) {
  if (expo == 0.0) return 1.0;
  if (base <= 0.0) return 0.0;
  if (base < 1e-300) return std::exp(expo * std::log(base));
  return std::pow(base, expo);
}

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("alpha must lie in (0,1]");
}

Eigen::ArrayXd psi_segment(const TimeGrid& grid, const PsiMap& psi) {
  Eigen::ArrayXd u(grid.main_steps() + 1);
  for (int i = 0; i <= grid.main_steps(); ++i)
    u[i] = psi.eval(grid.node(grid.t0_index() + i));
  return u;
}

// Accumulates the two product-trapezoidal weights of subinterval [u_j, u_{j+1}]
// for target value U, given a = U-u_j, b = U-u_{j+1} and the powers
// pa = a^alpha, pb = b^alpha. M1 is clamped to its exact range [0, du*M0]
// so every node weight stays nonnegative.
inline void cell_weights(double a, double pa, double pb, double du,
                         double alpha, double& w_left, double& w_right) {
  const double m0 = (pa - pb) / alpha;
  double m1 = a * m0 - (pa * a - pb * (a - du)) / (alpha + 1.0);
  m1 = std::min(std::max(m1, 0.0), du * m0);
  w_left = m0 - m1 / du;
  w_right = m1 / du;
}

}  // namespace

RlQuadrature::RlQuadrature(const TimeGrid& grid, double alpha,
                           const PsiMap& psi)
    : alpha_(alpha) {
  check_alpha(alpha);
  validate_psi_on_segment(psi, grid);
  u_ = psi_segment(grid, psi);
  const int n = size();
  weights_.setZero(n, n);
  const double inv_gamma = 1.0 / gamma_fn(alpha);
  Eigen::ArrayXd pa(n);
  for (int i = 1; i < n; ++i) {
    const double U = u_[i];
    for (int j = 0; j <= i; ++j) pa[j] = pow_frac(U - u_[j], alpha);
    for (int j = 0; j < i; ++j) {
      const double du = u_[j + 1] - u_[j];
      double wl, wr;
      cell_weights(U - u_[j], pa[j], pa[j + 1], du, alpha, wl, wr);
      weights_(i, j) += wl * inv_gamma;
      weights_(i, j + 1) += wr * inv_gamma;
    }
  }
}

Eigen::ArrayXd RlQuadrature::apply(const Eigen::ArrayXd& segment_values) const {
  if (segment_values.size() != size())
    throw std::invalid_argument("segment size does not match quadrature");
  return (weights_.triangularView<Eigen::Lower>() * segment_values.matrix())
      .array();
}

Eigen::ArrayXd RlQuadrature::weight_row(const Eigen::ArrayXd& u, double alpha,
                                        int row) {
  check_alpha(alpha);
  const double inv_gamma = 1.0 / gamma_fn(alpha);
  Eigen::ArrayXd w = Eigen::ArrayXd::Zero(u.size());
  const double U = u[row];
  double pa_j = pow_frac(U - u[0], alpha);
  for (int j = 0; j < row; ++j) {
    const double pa_next = pow_frac(U - u[j + 1], alpha);
    const double du = u[j + 1] - u[j];
    double wl, wr;
    cell_weights(U - u[j], pa_j, pa_next, du, alpha, wl, wr);
    w[j] += wl * inv_gamma;
    w[j + 1] += wr * inv_gamma;
    pa_j = pa_next;
  }
  return w;
}

Path rl_integral(const Path& f, double alpha, const PsiMap& psi) {
  if (!f.finite())
    throw std::invalid_argument("path contains non-finite values");
  const TimeGrid& grid = f.grid();
  RlQuadrature quad(grid, alpha, psi);
  const Eigen::ArrayXd integ = quad.apply(f.segment_values());
  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(grid.node_count());
  out.tail(grid.main_steps() + 1) = integ;
  return Path(f.grid_ptr(), std::move(out));
}

double rl_integral_at_end(const Path& f, double alpha, const PsiMap& psi) {
  if (!f.finite())
    throw std::invalid_argument("path contains non-finite values");
  const TimeGrid& grid = f.grid();
  validate_psi_on_segment(psi, grid);
  const Eigen::ArrayXd u = psi_segment(grid, psi);
  const Eigen::ArrayXd w =
      RlQuadrature::weight_row(u, alpha, static_cast<int>(u.size()) - 1);
  return (w * f.segment_values()).sum();
}

double power_rule_oracle(double delta, double alpha, const PsiMap& psi,
                         double t0, double t) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (!(t >= t0)) throw std::invalid_argument("t must not precede t0");
  const double v = psi.eval(t) - psi.eval(t0);
  return gamma_fn(delta) / gamma_fn(delta + alpha) *
         pow_frac(v, delta + alpha - 1.0);
}

}  // namespace fracstab
