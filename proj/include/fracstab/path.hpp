#pragma once

#include <Eigen/Core>
#include <functional>

#include "fracstab/time_grid.hpp"

namespace fracstab {

using ScalarFn = std::function<double(double)>;
// positive continuous weight / bound function of t
using WeightFn = ScalarFn;

// A sampled function on a delay-aligned grid, one value per node.
class Path {
 public:
  Path(GridPtr grid, Eigen::ArrayXd values);
  static Path sampled(GridPtr grid, const ScalarFn& f);
  static Path constant(GridPtr grid, double c);

  const TimeGrid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  const Eigen::ArrayXd& values() const { return values_; }
  double operator[](int i) const { return values_[i]; }
  int size() const { return static_cast<int>(values_.size()); }

  // values on the [t0, T] segment
  Eigen::ArrayXd segment_values() const;

  bool finite() const { return values_.isFinite().all(); }

 private:
  GridPtr grid_;
  Eigen::ArrayXd values_;
};

// Samples w on every grid node, throwing if any sample is not positive.
Eigen::ArrayXd sample_weight(const TimeGrid& grid, const WeightFn& w);

// sup over nodes of |p - q| / w; +infinity if a ratio overflows.
double weighted_distance(const Path& p, const Path& q, const WeightFn& w);

// sup over nodes of |p - q|
double uniform_distance(const Path& p, const Path& q);

}  // namespace fracstab
