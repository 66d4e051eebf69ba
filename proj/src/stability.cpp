#include "fracstab/stability.hpp"

#include <cmath>
#include <stdexcept>

#include "fracstab/gamma.hpp"
#include "fracstab/rl_quadrature.hpp"
#include "fracstab/rng.hpp"

namespace fracstab {

namespace {

constexpr double kGridSafety = 1.02;

double estimate_K_with(const RlQuadrature& quad, const Eigen::ArrayXd& phi_seg) {
  const Eigen::ArrayXd integ = quad.apply(phi_seg);
  return kGridSafety * (integ / phi_seg).maxCoeff();
}

// runs the seeded experiments shared by both certificates
void run_experiments(StabilityCertificate& cert, const DelayProblem& problem,
                     const WeightFn& residual_bound, double epsilon,
                     const Eigen::ArrayXd& phi_nodes, int experiments,
                     std::uint64_t seed, InitialTermMode mode,
                     const WeightFn& stop_weight) {
  SolveReport base = solve_fixed_point(problem, mode, 1e-10, 200, stop_weight);
  if (!base.converged)
    throw std::runtime_error("fixed-point solve did not converge");
  cert.solution = base.solution;
  const Path& y0 = *cert.solution;
  const Path& bound = *cert.bound;

  cert.max_deviation = Eigen::ArrayXd::Zero(problem.grid().node_count());
  cert.experiments = experiments;
  for (int e = 0; e < experiments; ++e) {
    const Path y = make_quasi_solution(problem, residual_bound, epsilon,
                                       mix_seed(seed, e), mode);
    const Eigen::ArrayXd dev = (y.values() - y0.values()).abs();
    cert.max_deviation = cert.max_deviation.max(dev);
    // ratio with the 0/0 -> 0 convention for a degenerate (zero) bound
    Eigen::ArrayXd ratio(dev.size());
    for (int i = 0; i < dev.size(); ++i)
      ratio[i] = dev[i] == 0.0 ? 0.0 : dev[i] / bound[i];
    int worst = 0;
    const double sup = ratio.maxCoeff(&worst);
    cert.worst_nodes.emplace_back(problem.grid().node(worst), sup);
    cert.empirical_sup_ratio = std::max(cert.empirical_sup_ratio, sup);
    cert.generalized_c_phi =
        std::max(cert.generalized_c_phi, (dev / phi_nodes).maxCoeff());
  }

  const double min_bound = bound.values().minCoeff();
  const double slack =
      1e-6 + (min_bound > 0.0 ? 2.0 * 1e-10 / min_bound : 0.0);
  cert.pass = cert.condition_ok && cert.empirical_sup_ratio <= 1.0 + slack;
}

}  // namespace

double estimate_K(const WeightFn& phi, double alpha, const PsiMap& psi,
                  const TimeGrid& grid) {
  Eigen::ArrayXd phi_seg(grid.main_steps() + 1);
  for (int i = 0; i <= grid.main_steps(); ++i) {
    phi_seg[i] = phi(grid.node(grid.t0_index() + i));
    if (!(phi_seg[i] > 0.0)) throw std::invalid_argument("phi must be positive");
  }
  RlQuadrature quad(grid, alpha, psi);
  return estimate_K_with(quad, phi_seg);
}

StabilityCertificate certify_uhr(const DelayProblem& problem,
                                 const WeightFn& phi, int experiments,
                                 std::uint64_t seed, InitialTermMode mode) {
  if (experiments < 1)
    throw std::invalid_argument("experiments must be at least 1");
  StabilityCertificate cert;
  cert.kind = StabilityKind::UlamHyersRassias;

  const Eigen::ArrayXd phi_nodes = sample_weight(problem.grid(), phi);
  const Eigen::ArrayXd phi_seg =
      phi_nodes.tail(problem.grid().main_steps() + 1);
  cert.K = estimate_K_with(problem.quadrature(), phi_seg);
  cert.contraction = cert.K * problem.lipschitz_sum();

  if (problem.lipschitz_sum() == 0.0) {
    cert.reason = "degenerate Lipschitz (L1+L2 = 0)";
    return cert;
  }
  if (cert.contraction >= 1.0) {
    cert.reason = "contraction K(L1+L2) not below 1";
    return cert;
  }
  cert.condition_ok = true;

  cert.bound = Path(problem.grid_ptr(),
                    cert.K * phi_nodes / (1.0 - cert.contraction));
  run_experiments(cert, problem, phi, /*epsilon=*/1.0, phi_nodes, experiments,
                  seed, mode, phi);
  return cert;
}

StabilityCertificate certify_uh(const DelayProblem& problem, double epsilon,
                                int experiments, std::uint64_t seed,
                                InitialTermMode mode, UhMode uh_mode,
                                StabilityKind kind) {
  if (experiments < 1)
    throw std::invalid_argument("experiments must be at least 1");
  if (epsilon < 0.0) throw std::invalid_argument("epsilon must be nonnegative");
  StabilityCertificate cert;
  cert.kind = kind;

  const double alpha = problem.order().alpha();
  const double psi_T = problem.psi().eval(problem.grid().t_end());
  const double base = uh_mode == UhMode::PaperLiteral
                          ? psi_T
                          : psi_T - problem.psi().eval(problem.grid().t0());
  if (!(base > 0.0)) {
    cert.reason = "nonpositive psi(T) base";
    return cert;
  }
  const double g1 = gamma_fn(alpha + 1.0);
  const double num = std::pow(base, alpha);
  cert.contraction = num * problem.lipschitz_sum() / g1;

  if (problem.lipschitz_sum() == 0.0) {
    cert.reason = "degenerate Lipschitz (L1+L2 = 0)";
    return cert;
  }
  if (cert.contraction >= 1.0) {
    cert.reason = "contraction psi(T)^alpha (L1+L2)/Gamma(alpha+1) not below 1";
    return cert;
  }
  cert.condition_ok = true;

  const double B = epsilon * num / (g1 - num * problem.lipschitz_sum());
  cert.bound = Path::constant(problem.grid_ptr(), B);
  const Eigen::ArrayXd ones =
      Eigen::ArrayXd::Ones(problem.grid().node_count());
  run_experiments(cert, problem, [](double) { return 1.0; }, epsilon, ones,
                  experiments, seed, mode, {});
  return cert;
}

double hadamard_bound(double epsilon, double T, double alpha, double L1,
                      double L2) {
  if (!(T > 1.0)) throw std::invalid_argument("T must exceed 1");
  if (epsilon < 0.0) throw std::invalid_argument("epsilon must be nonnegative");
  const double num = std::pow(std::log(T), alpha);
  const double g1 = gamma_fn(alpha + 1.0);
  if (!(num * (L1 + L2) < g1))
    throw std::invalid_argument("contraction violated");
  return epsilon * num / (g1 - num * (L1 + L2));
}

double classical_bound(double epsilon, double T, double L1, double L2) {
  if (!(T > 0.0)) throw std::invalid_argument("T must be positive");
  if (epsilon < 0.0) throw std::invalid_argument("epsilon must be nonnegative");
  if (!(T * (L1 + L2) < 1.0))
    throw std::invalid_argument("contraction violated");
  return epsilon * T / (1.0 - T * (L1 + L2));
}

BoundCheck verify_bound(const Path& y, const Path& y0, const Path& bound) {
  if (!y.grid().same_as(y0.grid()) || !y.grid().same_as(bound.grid()))
    throw std::invalid_argument("grid mismatch");
  if (!(bound.values() > 0.0).all())
    throw std::invalid_argument("bound must be positive");
  const Eigen::ArrayXd ratio = (y.values() - y0.values()).abs() / bound.values();
  int worst = 0;
  const double sup = ratio.maxCoeff(&worst);
  return {sup, y.grid().node(worst), sup <= 1.0 + 1e-6};
}

}  // namespace fracstab
