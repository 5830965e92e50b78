#include "szegolab/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "szegolab/errors.hpp"

namespace szegolab {

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("log_gamma: argument must be finite and positive, got " +
                      std::to_string(x));
  }
  // glibc's lgamma_r is accurate to a few ulp on (0, inf) and does not touch
  // the global signgam, so concurrent calls are safe.
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double log_beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw DomainError("beta_fn: arguments must be positive");
  }
  // Sum the two lgamma terms in a fixed, symmetric way so B(x,y) == B(y,x).
  const double lx = log_gamma(x);
  const double ly = log_gamma(y);
  return (lx + ly) - log_gamma(x + y);
}

double beta_fn(double x, double y) { return std::exp(log_beta(x, y)); }

double beta_asymptotic(double x, double y) {
  const double log_value = 0.5 * std::log(2.0 * std::numbers::pi) +
                           (x - 0.5) * std::log(x) + (y - 0.5) * std::log(y) -
                           (x + y - 0.5) * std::log(x + y);
  return std::exp(log_value);
}

std::uint64_t binomial_exact(int m, int k) {
  if (m < 0 || k < 0 || k > m) return 0;
  if (m > 62) throw DomainError("binomial_exact: m must be <= 62");
  k = std::min(k, m - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    // acc * (m - k + i) is divisible by i at every step.
    acc = acc * static_cast<unsigned __int128>(m - k + i) / i;
  }
  return static_cast<std::uint64_t>(acc);
}

double binomial(int m, int k) {
  if (m < 0 || k < 0 || k > m) return 0.0;
  if (m <= 62) return static_cast<double>(binomial_exact(m, k));
  return std::exp(log_gamma(m + 1.0) - log_gamma(k + 1.0) -
                  log_gamma(m - k + 1.0));
}

double log_normalizing_constant(int n, double alpha) {
  if (n < 1) throw DomainError("normalizing_constant: n must be >= 1");
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw DomainError("normalizing_constant: alpha must be > -1");
  }
  // Gamma(alpha+1+n) / (n! Gamma(alpha+1)) = prod_{k=1}^{n} (alpha+k)/k.
  double acc = 0.0;
  for (int k = 1; k <= n; ++k) acc += std::log((alpha + k) / k);
  return acc;
}

double normalizing_constant(int n, double alpha) {
  return std::exp(log_normalizing_constant(n, alpha));
}

WeightedModel WeightedModel::make(int n, double alpha) {
  WeightedModel model;
  model.n = n;
  model.alpha = alpha;
  model.c_alpha = normalizing_constant(n, alpha);
  return model;
}

}  // namespace szegolab
