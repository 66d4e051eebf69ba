#pragma once

#include <Eigen/Core>
#include <memory>

namespace fracstab {

// Uniform grid in t covering [t0 - a, T], aligned so that t - a always lands
// on a node: h = delay / steps_per_delay and every node is t0 + k*h for an
// integer k. T is rounded up to the next node if (T - t0) is not a whole
// number of steps.
class TimeGrid {
 public:
  TimeGrid(double t0, double t_end, double delay, int steps_per_delay);

  double t0() const { return t0_; }
  double t_end() const { return t_end_; }
  double delay() const { return delay_; }
  int steps_per_delay() const { return m_; }
  double h() const { return h_; }

  // nodes are indexed 0 .. node_count()-1; index t0_index() holds t0
  int history_steps() const { return m_; }
  int main_steps() const { return main_steps_; }
  int node_count() const { return m_ + main_steps_ + 1; }
  int t0_index() const { return m_; }
  double node(int i) const { return t0_ + (i - m_) * h_; }

  Eigen::ArrayXd nodes() const;
  // nodes t0 .. T only
  Eigen::ArrayXd segment_nodes() const;

  bool same_as(const TimeGrid& other) const;

 private:
  double t0_, t_end_, delay_, h_;
  int m_, main_steps_;
};

using GridPtr = std::shared_ptr<const TimeGrid>;

GridPtr make_grid(double t0, double t_end, double delay, int steps_per_delay);

}  // namespace fracstab
