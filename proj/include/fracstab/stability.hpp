#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracstab/delay_problem.hpp"
#include "fracstab/path.hpp"
#include "fracstab/picard.hpp"

namespace fracstab {

enum class StabilityKind { UlamHyersRassias, UlamHyers, Hadamard, Classical };

// contraction base for the Ulam-Hyers certificate: psi(T)^alpha, or the
// difference form (psi(T)-psi(t0))^alpha which is invariant under shifts
// of the psi origin
enum class UhMode { PaperLiteral, Tight };

struct StabilityCertificate {
  StabilityKind kind = StabilityKind::UlamHyersRassias;
  double K = 0.0;              // Rassias certificates only
  double contraction = 0.0;    // K(L1+L2), or psi(T)^alpha (L1+L2)/Gamma(a+1)
  bool condition_ok = false;
  std::string reason;          // set when the certificate fails closed
  std::optional<Path> solution;       // y0
  std::optional<Path> bound;          // B(t) samples on the full grid
  Eigen::ArrayXd max_deviation;       // per node, max over experiments
  double empirical_sup_ratio = 0.0;   // max |y-y0| / B over experiments/nodes
  double generalized_c_phi = 0.0;     // max |y-y0| / phi over experiments/nodes
  int experiments = 0;
  bool pass = false;
  // per experiment: (t of worst node, sup ratio)
  std::vector<std::pair<double, double>> worst_nodes;
};

// Least grid-feasible K with |I^{alpha;psi} phi|(t) <= K phi(t) on [t0, T],
// inflated by 1.02 for off-node behavior.
double estimate_K(const WeightFn& phi, double alpha, const PsiMap& psi,
                  const TimeGrid& grid);

// Ulam-Hyers-Rassias certificate: condition 0 < K(L1+L2) < 1, bound
// B(t) = K phi(t) / (1 - K(L1+L2)), checked against seeded quasi-solutions
// with residual bound phi.
StabilityCertificate certify_uhr(const DelayProblem& problem,
                                 const WeightFn& phi, int experiments,
                                 std::uint64_t seed,
                                 InitialTermMode mode = InitialTermMode::PaperLiteral);

// Ulam-Hyers certificate: condition 0 < psi(T)^alpha (L1+L2)/Gamma(alpha+1) < 1,
// constant bound B = eps psi(T)^alpha / (Gamma(alpha+1) - psi(T)^alpha (L1+L2)),
// checked against quasi-solutions with residual bound eps.
StabilityCertificate certify_uh(const DelayProblem& problem, double epsilon,
                                int experiments, std::uint64_t seed,
                                InitialTermMode mode = InitialTermMode::PaperLiteral,
                                UhMode uh_mode = UhMode::PaperLiteral,
                                StabilityKind kind = StabilityKind::UlamHyers);

// eps (ln T)^alpha / (Gamma(alpha+1) - (ln T)^alpha (L1+L2)); the psi = ln t,
// t0 = 1 specialization of the Ulam-Hyers bound.
double hadamard_bound(double epsilon, double T, double alpha, double L1,
                      double L2);

// eps T / (1 - T (L1+L2)); the psi = t, t0 = 0, alpha = 1 specialization.
double classical_bound(double epsilon, double T, double L1, double L2);

struct BoundCheck {
  double sup_ratio;
  double worst_node;  // t of the worst node
  bool ok;            // sup_ratio <= 1 + 1e-6
};

// sup over all nodes (history included) of |y - y0| / bound
BoundCheck verify_bound(const Path& y, const Path& y0, const Path& bound);

}  // namespace fracstab
