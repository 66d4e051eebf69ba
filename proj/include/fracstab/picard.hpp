#pragma once

#include <cstdint>
#include <optional>

#include "fracstab/delay_problem.hpp"
#include "fracstab/path.hpp"

namespace fracstab {

struct SolveReport {
  Path solution;
  int iterations = 0;
  // max ratio of successive iterate distances (0 if fewer than 3 iterates)
  double contraction_observed = 0.0;
  bool converged = false;
  // sup |residual| over segment nodes excluding the first two; absent when
  // residual evaluation was skipped or the grid is too short
  std::optional<double> final_residual_sup;
  // |y(t0+h) - Phi(t0)|, the jump of the integral branch at t0 (diagnostic;
  // the two branches of the operator need not agree at t0 when gamma < 1)
  double initial_jump = 0.0;
};

// One application of the Picard operator: Phi on [t0-a, t0] and
// W(t)*Phi(t0) + I^{alpha;psi}[ F(s, y(s), y(s-a)) ](t) on (t0, T], where
// W depends on the initial-term mode. The candidate must equal Phi on the
// history segment.
Path apply_omega(const Path& candidate, const DelayProblem& problem,
                 InitialTermMode mode = InitialTermMode::PaperLiteral);

// Fixed-point iteration from the history-extended constant candidate (or
// `initial` when given). Stops when the weighted distance between successive
// iterates drops to tol (weight = stop_weight, uniform when absent).
// Non-convergence at max_iter is reported, not thrown; non-finite iterates
// throw "divergent iteration".
SolveReport solve_fixed_point(const DelayProblem& problem,
                              InitialTermMode mode = InitialTermMode::PaperLiteral,
                              double tol = 1e-10, int max_iter = 200,
                              const WeightFn& stop_weight = {},
                              const Path* initial = nullptr,
                              bool compute_residual = true);

// r(t) = D^{alpha,beta;psi} y(t) - F(t, y(t), y(t-a)) on [t0, T];
// history nodes of the result are 0.
Path residual(const Path& y, const DelayProblem& problem);

// sup |r| over segment nodes excluding the first two
double residual_sup(const Path& r);

// Solves the problem with right-hand side F + epsilon*bound(t)*s(t), where
// s is a seed-determined random Fourier sum (<= 5 modes) normalized to
// sup <= 1 on the segment. The result satisfies
// |D y - F(t,y,y(t-a))| <= epsilon*bound(t) up to discretization slack and
// equals Phi on the history segment. epsilon = 0 returns the unperturbed
// solution.
Path make_quasi_solution(const DelayProblem& problem, const WeightFn& bound,
                         double epsilon, std::uint64_t seed,
                         InitialTermMode mode = InitialTermMode::PaperLiteral);

}  // namespace fracstab
