#pragma once

namespace fracstab {

// Fractional order pair (alpha, beta) with the derived exponent
// gamma = alpha + beta*(1 - alpha). alpha in (0,1], beta in [0,1].
class FracOrder {
 public:
  FracOrder(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }

  // exponents of the two integral stages of the Hilfer composition
  double inner_exponent() const { return (1.0 - beta_) * (1.0 - alpha_); }
  double outer_exponent() const { return beta_ * (1.0 - alpha_); }

 private:
  double alpha_, beta_, gamma_;
};

}  // namespace fracstab
