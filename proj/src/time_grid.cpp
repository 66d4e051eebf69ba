#include "fracstab/time_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace fracstab {

TimeGrid::TimeGrid(double t0, double t_end, double delay, int steps_per_delay)
    : t0_(t0), delay_(delay), m_(steps_per_delay) {
  if (!(delay > 0.0)) throw std::invalid_argument("delay_a must be positive");
  if (steps_per_delay < 1)
    throw std::invalid_argument("steps_per_delay must be at least 1");
  if (!(t_end > t0)) throw std::invalid_argument("T must exceed t0");
  if (!std::isfinite(t0) || !std::isfinite(t_end))
    throw std::invalid_argument("grid endpoints must be finite");
  h_ = delay / m_;
  // round T up to a whole number of steps, with a tolerance so that an
  // endpoint that is a step boundary up to rounding stays put
  main_steps_ = static_cast<int>(std::ceil((t_end - t0) / h_ - 1e-9));
  if (main_steps_ < 1) main_steps_ = 1;
  t_end_ = t0_ + main_steps_ * h_;
}

Eigen::ArrayXd TimeGrid::nodes() const {
  Eigen::ArrayXd out(node_count());
  for (int i = 0; i < node_count(); ++i) out[i] = node(i);
  return out;
}

Eigen::ArrayXd TimeGrid::segment_nodes() const {
  Eigen::ArrayXd out(main_steps_ + 1);
  for (int i = 0; i <= main_steps_; ++i) out[i] = node(m_ + i);
  return out;
}

bool TimeGrid::same_as(const TimeGrid& other) const {
  return t0_ == other.t0_ && t_end_ == other.t_end_ &&
         delay_ == other.delay_ && m_ == other.m_;
}

GridPtr make_grid(double t0, double t_end, double delay, int steps_per_delay) {
  return std::make_shared<const TimeGrid>(t0, t_end, delay, steps_per_delay);
}

}  // namespace fracstab
