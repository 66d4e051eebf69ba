#include "fracstab/picard.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fracstab/gamma.hpp"
#include "fracstab/hilfer_derivative.hpp"
#include "fracstab/rl_quadrature.hpp"
#include "fracstab/rng.hpp"

namespace fracstab {

namespace {

// weight on Phi(t0) for segment node k (k = 0 is t0 itself)
Eigen::ArrayXd initial_term_weights(const DelayProblem& problem,
                                    InitialTermMode mode) {
  const double gamma_par = problem.order().gamma();
  const double expo = mode == InitialTermMode::PaperLiteral
                          ? 1.0 - gamma_par
                          : gamma_par - 1.0;
  const double inv_gamma = 1.0 / gamma_fn(gamma_par);
  const Eigen::ArrayXd& u = problem.quadrature().u();
  Eigen::ArrayXd w(u.size());
  w[0] = 0.0;  // unused: the history branch owns the t0 node
  for (int k = 1; k < u.size(); ++k)
    w[k] = (expo == 0.0 ? 1.0 : pow_frac(u[k] - u[0], expo)) * inv_gamma;
  return w;
}

Path history_extended_constant(const DelayProblem& problem) {
  const TimeGrid& grid = problem.grid();
  Eigen::ArrayXd v(grid.node_count());
  v.head(grid.history_steps() + 1) = problem.history_values();
  v.tail(grid.main_steps()) = problem.history_values()[grid.history_steps()];
  return Path(problem.grid_ptr(), std::move(v));
}

Eigen::ArrayXd rhs_segment(const Path& y, const DelayProblem& problem) {
  const TimeGrid& grid = problem.grid();
  const int m = grid.t0_index();
  Eigen::ArrayXd g(grid.main_steps() + 1);
  for (int i = 0; i <= grid.main_steps(); ++i)
    g[i] = problem.rhs()(grid.node(m + i), y[m + i], y[i]);
  return g;
}

}  // namespace

Path apply_omega(const Path& candidate, const DelayProblem& problem,
                 InitialTermMode mode) {
  const TimeGrid& grid = problem.grid();
  if (!candidate.grid().same_as(grid))
    throw std::invalid_argument("grid mismatch");
  for (int i = 0; i <= grid.history_steps(); ++i)
    if (candidate[i] != problem.history_values()[i])
      throw std::invalid_argument("candidate/history mismatch");

  const Eigen::ArrayXd g = rhs_segment(candidate, problem);
  const Eigen::ArrayXd integ = problem.quadrature().apply(g);
  const Eigen::ArrayXd w = initial_term_weights(problem, mode);
  const double phi_t0 = problem.history_values()[grid.history_steps()];

  Eigen::ArrayXd out(grid.node_count());
  out.head(grid.history_steps() + 1) = problem.history_values();
  for (int k = 1; k <= grid.main_steps(); ++k)
    out[grid.t0_index() + k] = w[k] * phi_t0 + integ[k];
  Path result(candidate.grid_ptr(), std::move(out));
  if (!result.finite()) throw std::runtime_error("divergent iteration");
  return result;
}

SolveReport solve_fixed_point(const DelayProblem& problem, InitialTermMode mode,
                              double tol, int max_iter,
                              const WeightFn& stop_weight, const Path* initial,
                              bool compute_residual) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  const WeightFn w = stop_weight ? stop_weight : [](double) { return 1.0; };
  const Eigen::ArrayXd wv = sample_weight(problem.grid(), w);

  Path p = initial ? *initial : history_extended_constant(problem);
  SolveReport report{p, 0, 0.0, false, std::nullopt, 0.0};
  double prev_dist = -1.0;
  for (int k = 0; k < max_iter; ++k) {
    Path q = apply_omega(p, problem, mode);
    const double dist = ((q.values() - p.values()).abs() / wv).maxCoeff();
    const double noise_floor =
        1e-12 * (1.0 + (q.values().abs() / wv).maxCoeff());
    if (prev_dist > noise_floor)
      report.contraction_observed =
          std::max(report.contraction_observed, dist / prev_dist);
    prev_dist = dist;
    p = std::move(q);
    report.iterations = k + 1;
    if (dist <= tol) {
      report.converged = true;
      break;
    }
  }
  report.solution = p;
  const int m = problem.grid().t0_index();
  report.initial_jump = std::abs(p[m + 1] - p[m]);
  if (compute_residual && problem.grid().main_steps() + 1 >= 3)
    report.final_residual_sup = residual_sup(residual(p, problem));
  return report;
}

Path residual(const Path& y, const DelayProblem& problem) {
  const TimeGrid& grid = problem.grid();
  if (!y.grid().same_as(grid)) throw std::invalid_argument("grid mismatch");
  const Path deriv = psi_hilfer_derivative(y, problem.order(), problem.psi());
  const Eigen::ArrayXd g = rhs_segment(y, problem);
  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(grid.node_count());
  out.tail(grid.main_steps() + 1) = deriv.segment_values() - g;
  return Path(y.grid_ptr(), std::move(out));
}

double residual_sup(const Path& r) {
  const Eigen::ArrayXd seg = r.segment_values().abs();
  const int n = static_cast<int>(seg.size());
  if (n <= 2) return 0.0;
  return seg.tail(n - 2).maxCoeff();
}

Path make_quasi_solution(const DelayProblem& problem, const WeightFn& bound,
                         double epsilon, std::uint64_t seed,
                         InitialTermMode mode) {
  if (epsilon < 0.0 || epsilon > 1.0)
    throw std::invalid_argument("epsilon must lie in [0,1]");
  sample_weight(problem.grid(), bound);  // reject nonpositive bounds early

  if (epsilon == 0.0) {
    SolveReport report = solve_fixed_point(problem, mode, 1e-10, 200, bound,
                                           nullptr, /*compute_residual=*/false);
    if (!report.converged)
      throw std::runtime_error("quasi-solution solve did not converge");
    return report.solution;
  }

  // smooth perturbation: Fourier sum with 5 modes over [t0, T]
  std::mt19937_64 eng(seed);
  double a[5], b[5];
  for (int k = 0; k < 5; ++k) {
    a[k] = symmetric_draw(eng);
    b[k] = symmetric_draw(eng);
  }
  const TimeGrid& grid = problem.grid();
  const double t0 = grid.t0(), span = grid.t_end() - grid.t0();
  const auto shape = [a, b, t0, span](double t) {
    const double tau = (t - t0) / span;
    double s = 0.0;
    for (int k = 0; k < 5; ++k) {
      const double arg = (k + 1) * std::numbers::pi * tau;
      s += a[k] * std::cos(arg) + b[k] * std::sin(arg);
    }
    return s;
  };
  double sup = 0.0;
  for (int i = grid.t0_index(); i < grid.node_count(); ++i)
    sup = std::max(sup, std::abs(shape(grid.node(i))));
  const double scale = sup > 0.0 ? 1.0 / sup : 0.0;

  const Rhs base = problem.rhs();
  Rhs perturbed = [base, bound, epsilon, shape, scale](double t, double y,
                                                       double yd) {
    return base(t, y, yd) + epsilon * bound(t) * scale * shape(t);
  };
  SolveReport report =
      solve_fixed_point(problem.with_rhs(std::move(perturbed)), mode, 1e-10,
                        200, bound, nullptr, /*compute_residual=*/false);
  if (!report.converged) {
    std::ostringstream msg;
    msg << "quasi-solution solve did not converge (iterations="
        << report.iterations
        << ", contraction_observed=" << report.contraction_observed << ")";
    throw std::runtime_error(msg.str());
  }
  return report.solution;
}

}  // namespace fracstab
