#include "szegolab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "szegolab/errors.hpp"

namespace szegolab::quad {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Sum of term(t) over t = k*h for k != 0 with -t_left <= t <= t_right (odd k
// only when refining an existing level).
template <typename Term>
double de_sum(const Term& term, double h, double t_left, double t_right, bool odd_only) {
  double sum = 0.0;
  const int k_right = static_cast<int>(t_right / h);
  const int k_left = static_cast<int>(t_left / h);
  for (int k = 1; k <= std::max(k_left, k_right); ++k) {
    if (odd_only && k % 2 == 0) continue;
    const double t = k * h;
    if (k <= k_right) sum += term(t);
    if (k <= k_left) sum += term(-t);
  }
  return sum;
}

}  // namespace

GaussRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

Result tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int max_levels) {
  const double half = 0.5 * (b - a);
  // Evaluate via the distance to the nearer endpoint so that abscissae close
  // to a or b keep full relative precision.
  auto term = [&](double t) {
    const double s = kHalfPi * std::sinh(t);
    const double c = std::cosh(s);
    const double w = half * kHalfPi * std::cosh(t) / (c * c);
    // 1 - tanh(|s|) = 2 / (1 + e^{2|s|})
    const double gap = half * 2.0 / (1.0 + std::exp(2.0 * std::abs(s)));
    const double x = s > 0.0 ? b - gap : a + gap;
    if (gap <= 0.0 || x <= a || x >= b || w == 0.0) return 0.0;
    return w * f(x);
  };
  // At |t| = 6.5 the distance to the endpoint is below 1e-300, so even
  // strongly singular endpoint behaviour is not truncated.
  const double t_max = 6.5;
  double h = 0.5;
  double sum = term(0.0) + de_sum(term, h, t_max, t_max, false);
  double estimate = h * sum;
  Result result;
  for (int level = 1; level <= max_levels; ++level) {
    h *= 0.5;
    sum += de_sum(term, h, t_max, t_max, true);
    const double next = h * sum;
    result.error_estimate = std::abs(next - estimate);
    result.levels = level;
    estimate = next;
    if (level >= 3 && result.error_estimate <= rel_tol * std::abs(next)) {
      result.converged = true;
      break;
    }
  }
  result.value = estimate;
  return result;
}

Result exp_sinh(const std::function<double(double)>& f, double rel_tol,
                int max_levels) {
  auto term = [&](double t) {
    const double s = kHalfPi * std::sinh(t);
    if (s > 700.0) return 0.0;
    const double u = std::exp(s);
    if (u == 0.0) return 0.0;
    return kHalfPi * std::cosh(t) * u * f(u);
  };
  // u = exp(pi/2 sinh t): t = -6.5 reaches u < 1e-226 near the origin,
  // t = 4.5 reaches u > 1e30 at infinity.
  const double t_left = 6.5, t_right = 4.5;
  double h = 0.5;
  double sum = term(0.0) + de_sum(term, h, t_left, t_right, false);
  double estimate = h * sum;
  Result result;
  for (int level = 1; level <= max_levels; ++level) {
    h *= 0.5;
    sum += de_sum(term, h, t_left, t_right, true);
    const double next = h * sum;
    result.error_estimate = std::abs(next - estimate);
    result.levels = level;
    estimate = next;
    if (level >= 3 && result.error_estimate <= rel_tol * std::abs(next)) {
      result.converged = true;
      break;
    }
  }
  result.value = estimate;
  return result;
}

double gauss_composite(const std::function<double(double)>& f, double a,
                       double b, int panels, const GaussRule& rule) {
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double c = lo + 0.5 * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel += rule.weights[i] * f(c + 0.5 * width * rule.nodes[i]);
    }
    total += 0.5 * width * panel;
  }
  return total;
}

double periodic_trapezoid(const std::function<double(double)>& f, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += f(static_cast<double>(i) / n);
  return sum / n;
}

}  // namespace szegolab::quad
