#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rieszcheck {

/// Non-fatal diagnostics raised during parameter validation.
struct ParamWarnings {
  /// p > d: the Morrey exponent exceeds the dimension.
  bool p_exceeds_d = false;
  /// p * alpha >= d: on the whole space only b = 0 satisfies the Morrey
  /// bound; on a finite grid the constant is set by the largest balls.
  bool p_alpha_ge_d = false;

  bool any() const { return p_exceeds_d || p_alpha_ge_d; }
  std::vector<std::string> messages() const;
};

/// Scalar exponents of the weighted inequality together with the derived
/// exponents used by the individual checks.
///
/// Invariants (enforced by validate_params):
///   0 < alpha < d, alpha <= r, 1 < r < p, 1 < q <= p,
///   gamma > 0, (1+gamma) r <= p, 1 + gamma r' <= p, r >= 1 + gamma,
///   r' = r/(r-1), p0 = (r+p)/2, p1 = (r+p0)/2, r < p1 < p0 < p.
struct ExponentParams {
  int d = 1;
  double alpha = 0.0;
  double r = 0.0;
  double p = 0.0;
  double q = 0.0;
  double gamma = 0.0;
  double r_conj = 0.0;
  double p0 = 0.0;
  double p1 = 0.0;
  ParamWarnings warnings;
};

/// Validates (d, alpha, r, p) and fills the derived exponents. When q is
/// absent it defaults to (1 + p) / 2. Throws Error(InvalidParams).
ExponentParams validate_params(int d, double alpha, double r, double p,
                               std::optional<double> q = std::nullopt);

/// Largest gamma with (1+gamma) r <= p, 1 + gamma r' <= p and r >= 1+gamma.
double choose_gamma(double r, double p);

}  // namespace rieszcheck
