#pragma once

#include <functional>
#include <vector>

namespace szegolab::quad {

struct Result {
  double value = 0.0;
  double error_estimate = 0.0;  // |I_h - I_{h/2}| of the last refinement
  int levels = 0;
  bool converged = false;
};

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (Newton iteration on P_n).
GaussRule gauss_legendre(int n);

/// Double-exponential (tanh-sinh) quadrature on a finite interval. Tolerates
/// integrable endpoint singularities; f is never evaluated at a or b.
Result tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, int max_levels = 10);

/// Double-exponential (exp-sinh) quadrature on [0, inf). f must decay at
/// infinity; integrable singularities at 0 are fine.
Result exp_sinh(const std::function<double(double)>& f, double rel_tol = 1e-12,
                int max_levels = 10);

/// Composite Gauss-Legendre on [a, b] with `panels` equal panels.
double gauss_composite(const std::function<double(double)>& f, double a,
                       double b, int panels, const GaussRule& rule);

/// Trapezoid rule for a 1-periodic function on [0, 1) with n nodes.
double periodic_trapezoid(const std::function<double(double)>& f, int n);

}  // namespace szegolab::quad
