#pragma once

#include "fracstab/frac_order.hpp"
#include "fracstab/path.hpp"
#include "fracstab/psi_map.hpp"

namespace fracstab {

// psi-Hilfer fractional derivative of order (alpha, beta), evaluated on the
// [t0, T] segment as the composition
//
//   I^{beta(1-alpha);psi} o ( 1/psi'(t) d/dt ) o I^{(1-beta)(1-alpha);psi},
//
// with zero-exponent integrals taken as the identity. The first-order stage
// uses central differences, second-order one-sided stencils at the ends.
// History nodes of the result are 0.
Path psi_hilfer_derivative(const Path& f, const FracOrder& order,
                           const PsiMap& psi);

// sup over segment nodes, excluding the first two, of
// |psi_hilfer_derivative(rl_integral(f, alpha)) - f|.
double roundtrip_residual(const Path& f, const FracOrder& order,
                          const PsiMap& psi);

// Weighted sup norm max |(psi(t)-psi(t0))^{1-gamma} f(t)| over [t0, T];
// diagnostic for solutions that blow up at t0 (grid membership in the
// weighted space is not decidable from samples, so this is never asserted).
double weighted_sup_norm(const Path& f, const FracOrder& order,
                         const PsiMap& psi);

}  // namespace fracstab
