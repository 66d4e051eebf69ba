#pragma once

#include <functional>
#include <string>

#include "fracstab/time_grid.hpp"

namespace fracstab {

// Monotone scale function psi with its derivative. psi must be strictly
// increasing with psi' > 0 on the part of the grid it is evaluated on;
// domain_min is the open left end of its validity interval.
struct PsiMap {
  std::string name;
  std::function<double(double)> eval;
  std::function<double(double)> deriv;
  double domain_min;
};

PsiMap psi_identity();
PsiMap psi_log();
PsiMap psi_power(double sigma);
PsiMap psi_exp();

// key in {identity, log, power, exp}; sigma is used for power only
PsiMap psi_from_key(const std::string& key, double sigma = 1.0);

// Checks strict monotonicity and positive derivative on the [t0, T] segment.
void validate_psi_on_segment(const PsiMap& psi, const TimeGrid& grid);

// Max relative deviation between psi.deriv and a central difference of
// psi.eval over a fine probe grid; used by tests to vet catalog members.
double psi_deriv_inconsistency(const PsiMap& psi, double lo, double hi, int n);

}  // namespace fracstab
