#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "szegolab/geometry.hpp"
#include "szegolab/toeplitz.hpp"

namespace szegolab {

/// A test function phi with phi(t)/t^p continuous near 0 for the declared
/// p in (0, 1] (or larger for pure powers).
struct Phi {
  std::function<double(double)> f;
  double p = 1.0;
  std::string label;
  /// Nonempty for polynomials: coefficient of s^{k+1} at index k.
  std::vector<double> poly_coeffs;
  /// Set for pure powers s^exponent.
  std::optional<double> exponent;

  double operator()(double s) const { return f(s); }

  static Phi power(double p);
  /// c_1 s + c_2 s^2 + ... (no constant term).
  static Phi polynomial(std::vector<double> coeffs);
  static Phi callable(std::function<double(double)> f, double p, std::string label);
  /// Parses "pow:<p>" or "poly:<c1,c2,...>".
  static Phi parse(const std::string& spec);
};

struct QTransformSpec {
  double epsilon = 0.0;
  Phi phi;
  double rel_tol = 1e-11;
};

/// Q_eps(phi)(t) = (1/Gamma(eps)) int_0^t phi(s) (ln(t/s))^{eps-1} ds/s, the
/// identity at eps = 0. Evaluated as (1/Gamma(eps)) int_0^inf phi(t e^{-u}) u^{eps-1} du
/// with exp-sinh quadrature.
double q_transform(const QTransformSpec& spec, double t);

/// Exact Q_eps of a polynomial/power through Q_eps(s^p) = t^p / p^eps.
double q_transform_monomial_rule(const Phi& phi, double epsilon, double t);

/// (1/2^{d'/2}) int_Gamma Q_{d'/2}(phi)(a(xi)(1-|xi|^2)^{-(n+1)}) dsigma for the
/// circle (n = d = d' = 1). Constant symbols use the exact constant integrand.
double szego_rhs(const CircleSymbolModel& model, const Phi& phi);

/// Same right-hand side for a curve (d = 1) in B_n with symbol a(t), t in (0,1).
/// Composite Gauss-Legendre with panel doubling; AccuracyError if two
/// successive refinements disagree by more than 1e-6 relative.
double szego_rhs_curve(const ChartedSubmanifold& curve,
                       const std::function<double(double)>& symbol, const Phi& phi);

struct CountPrediction {
  double limit = 0.0;     // lim sqrt(pi/alpha) N_[t1,t2]
  std::optional<double> estimate;  // sqrt(alpha/pi) * limit
};

/// Circle with a = 1: sqrt(8 pi) r/(1-r^2) [sqrt(ln(1/((1-r^2)^2 t1))) - sqrt(ln(1/((1-r^2)^2 t2)))].
/// Requires 0 < t1 <= t2 <= 1/(1-r^2)^2.
CountPrediction count_prediction(double r, double t1, double t2,
                                 std::optional<double> alpha = std::nullopt);

/// D_a(s) = (2 pi r/(1-r^2)) (1/(sqrt(pi) s)) (ln(1/((1-r^2)^2 s)))^{-1/2}.
double eigenvalue_density(double r, double s);

/// #{lambda : t1 <= lambda <= t2}.
int eigen_count(const SpectrumTruncation& spectrum, double t1, double t2);

/// ((1/(2p)^{1/2}) int_Gamma (a (1-|xi|^2)^{-2})^p dsigma)^{1/p} for the circle.
double schatten_limit(const CircleSymbolModel& model, double p);

/// (pi/alpha)^{1/(2p)} (sum lambda^p)^{1/p}.
double scaled_schatten_norm(const SpectrumTruncation& spectrum, double p);

/// (pi/alpha)^{1/2} sum lambda^p along alpha_grid.
std::vector<double> boundedness_scan_small_p(const CircleSymbolModel& model, double p,
                                             const std::vector<double>& alpha_grid);

/// (pi/alpha)^{1/2} sum phi(lambda).
double scaled_trace(const SpectrumTruncation& spectrum, const Phi& phi);

struct ScanRow {
  double alpha = 0.0;
  double lhs_scaled = 0.0;
  double rhs_limit = 0.0;
  std::optional<int> count_N;
  std::optional<double> rhs_asymptotic_count;
};

struct Interval {
  double t1 = 0.0;
  double t2 = 0.0;
};

/// One row per alpha, in grid order. With `phi` the rows compare
/// (pi/alpha)^{1/2} Tr phi(T-hat) against szego_rhs; with `interval` they
/// compare sqrt(pi/alpha) N against count_prediction.
std::vector<ScanRow> convergence_scan(const CircleSymbolModel& model, const Phi& phi,
                                      const std::vector<double>& alpha_grid,
                                      Normalization convention = Normalization::alpha);
std::vector<ScanRow> convergence_scan(const CircleSymbolModel& model, Interval interval,
                                      const std::vector<double>& alpha_grid,
                                      Normalization convention = Normalization::alpha);

/// Spectrum used by the scans: closed form for a = 1, matrix otherwise.
SpectrumTruncation model_spectrum(const CircleSymbolModel& model,
                                  Normalization convention = Normalization::alpha);

struct NormAsymptote {
  double limit = 0.0;  // 1/(1-r^2)^2
  double r = 0.0;
  /// floor((alpha+1) r^2/(1-r^2)).
  long long m_star(double alpha) const;
};

NormAsymptote norm_asymptote(double r);

}  // namespace szegolab
