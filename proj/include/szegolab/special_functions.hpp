#pragma once

#include <cstdint>

namespace szegolab {

/// ln Gamma(x) for x > 0. Throws DomainError for x <= 0 or non-finite x.
double log_gamma(double x);

/// Euler Beta function B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y), via log space.
double beta_fn(double x, double y);
double log_beta(double x, double y);

/// Large-argument asymptote sqrt(2 pi) x^{x-1/2} y^{y-1/2} / (x+y)^{x+y-1/2}.
double beta_asymptotic(double x, double y);

/// Exact binomial coefficient; valid for m <= 62 (fits in 64 bits).
std::uint64_t binomial_exact(int m, int k);

/// Binomial coefficient as a double. Exact integer path for m <= 62,
/// exp(lgamma) path above that.
double binomial(int m, int k);

/// Ambient analytic context: complex dimension n, weight alpha > -1 and the
/// normalizing constant c_alpha = Gamma(alpha+1+n) / (n! Gamma(alpha+1)).
struct WeightedModel {
  int n = 1;
  double alpha = 0.0;
  double c_alpha = 1.0;

  static WeightedModel make(int n, double alpha);
};

double log_normalizing_constant(int n, double alpha);
double normalizing_constant(int n, double alpha);

}  // namespace szegolab
