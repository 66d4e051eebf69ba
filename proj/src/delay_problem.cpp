#include "fracstab/delay_problem.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fracstab {

namespace {

double unit_draw(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;  // [0, 1)
}

// |F(t,x,y) - F(t,z,w)| <= L1|x-z| + L2|y-w| on random probes
std::string probe_lipschitz(const Rhs& rhs, double L1, double L2,
                            const TimeGrid& grid) {
  std::mt19937_64 eng(0x5eedf00dULL);
  const double span = grid.t_end() - grid.t0();
  for (int k = 0; k < 256; ++k) {
    const double t = grid.t0() + span * unit_draw(eng);
    const double x = 4.0 * unit_draw(eng) - 2.0;
    const double y = 4.0 * unit_draw(eng) - 2.0;
    const double z = 4.0 * unit_draw(eng) - 2.0;
    const double w = 4.0 * unit_draw(eng) - 2.0;
    const double lhs = std::abs(rhs(t, x, y) - rhs(t, z, w));
    const double bound = L1 * std::abs(x - z) + L2 * std::abs(y - w);
    if (lhs > bound + 1e-9 * (1.0 + bound)) {
      std::ostringstream msg;
      msg << "declared Lipschitz constants violated at t=" << t
          << " (|dF|=" << lhs << " > " << bound << ")";
      return msg.str();
    }
  }
  return {};
}

}  // namespace

DelayProblem::DelayProblem(Rhs rhs, double L1, double L2, ScalarFn history,
                           FracOrder order, PsiMap psi, GridPtr grid)
    : rhs_(std::move(rhs)),
      L1_(L1),
      L2_(L2),
      history_(std::move(history)),
      order_(order),
      psi_(std::move(psi)),
      grid_(std::move(grid)) {
  if (!rhs_) throw std::invalid_argument("rhs must be callable");
  if (!history_) throw std::invalid_argument("history must be callable");
  if (L1_ < 0.0 || L2_ < 0.0)
    throw std::invalid_argument("Lipschitz constants must be nonnegative");

  history_values_.resize(grid_->history_steps() + 1);
  for (int i = 0; i <= grid_->history_steps(); ++i)
    history_values_[i] = history_(grid_->node(i));
  if (!history_values_.isFinite().all())
    throw std::invalid_argument("history not finite on [t0-a, t0]");

  quadrature_ =
      std::make_shared<const RlQuadrature>(*grid_, order_.alpha(), psi_);
  lipschitz_note_ = probe_lipschitz(rhs_, L1_, L2_, *grid_);
}

DelayProblem DelayProblem::with_rhs(Rhs rhs) const {
  DelayProblem copy = *this;
  copy.rhs_ = std::move(rhs);
  return copy;
}

}  // namespace fracstab
