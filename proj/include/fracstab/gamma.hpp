#pragma once

namespace fracstab {

/// Gamma function on (0, 20]. Out-of-domain arguments throw std::domain_error.
double gamma_fn(double x);

}  // namespace fracstab
