#include "fracstab/path.hpp"

#include <stdexcept>

namespace fracstab {

Path::Path(GridPtr grid, Eigen::ArrayXd values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw std::invalid_argument("path requires a grid");
  if (values_.size() != grid_->node_count())
    throw std::invalid_argument("path values must match grid node count");
}

Path Path::sampled(GridPtr grid, const ScalarFn& f) {
  Eigen::ArrayXd v(grid->node_count());
  for (int i = 0; i < grid->node_count(); ++i) v[i] = f(grid->node(i));
  return Path(std::move(grid), std::move(v));
}

Path Path::constant(GridPtr grid, double c) {
  Eigen::ArrayXd v = Eigen::ArrayXd::Constant(grid->node_count(), c);
  return Path(std::move(grid), std::move(v));
}

Eigen::ArrayXd Path::segment_values() const {
  return values_.tail(grid_->main_steps() + 1);
}

Eigen::ArrayXd sample_weight(const TimeGrid& grid, const WeightFn& w) {
  Eigen::ArrayXd out(grid.node_count());
  for (int i = 0; i < grid.node_count(); ++i) {
    out[i] = w(grid.node(i));
    if (!(out[i] > 0.0)) throw std::invalid_argument("phi must be positive");
  }
  return out;
}

double weighted_distance(const Path& p, const Path& q, const WeightFn& w) {
  if (!p.grid().same_as(q.grid()))
    throw std::invalid_argument("grid mismatch");
  const Eigen::ArrayXd wv = sample_weight(p.grid(), w);
  return ((p.values() - q.values()).abs() / wv).maxCoeff();
}

double uniform_distance(const Path& p, const Path& q) {
  if (!p.grid().same_as(q.grid()))
    throw std::invalid_argument("grid mismatch");
  return (p.values() - q.values()).abs().maxCoeff();
}

}  // namespace fracstab
