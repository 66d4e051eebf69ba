#pragma once

#include <functional>
#include <memory>
#include <string>

#include "fracstab/frac_order.hpp"
#include "fracstab/path.hpp"
#include "fracstab/psi_map.hpp"
#include "fracstab/rl_quadrature.hpp"
#include "fracstab/time_grid.hpp"

namespace fracstab {

// right-hand side F(t, y(t), y(t-a))
using Rhs = std::function<double(double, double, double)>;

// weight applied to Phi(t0) in the Picard operator's initial term
enum class InitialTermMode {
  PaperLiteral,     // (psi(t)-psi(t0))^{1-gamma} / Gamma(gamma)
  WeightedHilfer,   // (psi(t)-psi(t0))^{gamma-1} / Gamma(gamma)
};

// The delay problem D^{alpha,beta;psi} y(t) = F(t, y(t), y(t-a)) on [t0, T]
// with y = Phi on [t0-a, t0]. The declared Lipschitz constants (L1, L2) are
// probed on random samples at construction; violations are recorded as a
// warning on the problem, not an error. The quadrature weight table for the
// grid is built once here and shared by all solves.
class DelayProblem {
 public:
  DelayProblem(Rhs rhs, double L1, double L2, ScalarFn history,
               FracOrder order, PsiMap psi, GridPtr grid);

  const Rhs& rhs() const { return rhs_; }
  double L1() const { return L1_; }
  double L2() const { return L2_; }
  double lipschitz_sum() const { return L1_ + L2_; }
  const ScalarFn& history() const { return history_; }
  const FracOrder& order() const { return order_; }
  const PsiMap& psi() const { return psi_; }
  const TimeGrid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  double delay() const { return grid_->delay(); }

  // Phi sampled on [t0-a, t0] (history_steps()+1 values)
  const Eigen::ArrayXd& history_values() const { return history_values_; }
  const RlQuadrature& quadrature() const { return *quadrature_; }

  bool lipschitz_warning() const { return !lipschitz_note_.empty(); }
  const std::string& lipschitz_note() const { return lipschitz_note_; }

  // same problem with a different right-hand side; grid, history and the
  // weight table are shared, the Lipschitz probe is not rerun
  DelayProblem with_rhs(Rhs rhs) const;

 private:
  Rhs rhs_;
  double L1_, L2_;
  ScalarFn history_;
  FracOrder order_;
  PsiMap psi_;
  GridPtr grid_;
  Eigen::ArrayXd history_values_;
  std::shared_ptr<const RlQuadrature> quadrature_;
  std::string lipschitz_note_;
};

}  // namespace fracstab
