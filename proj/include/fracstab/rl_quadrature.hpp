#pragma once

#include <Eigen/Core>

#include "fracstab/path.hpp"
#include "fracstab/psi_map.hpp"
#include "fracstab/time_grid.hpp"

namespace fracstab {

// x^e for x >= 0, with the convention 0^e = 0 and log-space evaluation for
// bases below 1e-300 so that negative exponents cannot underflow silently.
double pow_frac(double base, double expo);

// Quadrature for the fractional integral with respect to psi,
//
//   (I^{alpha;psi} f)(t) = 1/Gamma(alpha) * int_{t0}^{t}
//                          psi'(s) (psi(t) - psi(s))^{alpha-1} f(s) ds,
//
// on the [t0, T] segment of a grid. After the change of variable u = psi(s)
// the integrand is g(u) * (psi(t) - u)^{alpha-1} with g = f o psi^{-1};
// g is interpolated linearly on each subinterval and the kernel moments
//   int (psi(t) - u)^{alpha-1} {1, u} du
// are evaluated in closed form, so the endpoint singularity is never
// sampled. All weights are nonnegative. The weight table is built once per
// (grid, alpha, psi) and is read-only afterwards.
class RlQuadrature {
 public:
  RlQuadrature(const TimeGrid& grid, double alpha, const PsiMap& psi);

  double alpha() const { return alpha_; }
  int size() const { return static_cast<int>(u_.size()); }
  const Eigen::ArrayXd& u() const { return u_; }
  const Eigen::MatrixXd& weights() const { return weights_; }

  // segment_values holds f at the nodes t0..T; returns the integral at the
  // same nodes (value 0 at t0)
  Eigen::ArrayXd apply(const Eigen::ArrayXd& segment_values) const;

  // single row of weights for target node `row` of a node set u in psi-space
  static Eigen::ArrayXd weight_row(const Eigen::ArrayXd& u, double alpha,
                                   int row);

 private:
  double alpha_;
  Eigen::ArrayXd u_;
  Eigen::MatrixXd weights_;
};

// I^{alpha;psi}_{t0+} f on the grid of f; history nodes of the result are 0.
Path rl_integral(const Path& f, double alpha, const PsiMap& psi);

// value of the integral at T only (O(n), no weight table)
double rl_integral_at_end(const Path& f, double alpha, const PsiMap& psi);

// Closed-form oracle: I^{alpha;psi}_{t0+} (psi(s)-psi(t0))^{delta-1}
//   = Gamma(delta)/Gamma(delta+alpha) * (psi(t)-psi(t0))^{delta+alpha-1}.
double power_rule_oracle(double delta, double alpha, const PsiMap& psi,
                         double t0, double t);

}  // namespace fracstab
