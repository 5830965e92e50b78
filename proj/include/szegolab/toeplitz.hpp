#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "szegolab/bergman.hpp"

namespace szegolab {

/// How T_{a dsigma} is scaled to T-hat. `alpha` is the standard
/// n!/(2^{d'/2} pi^{d/2}) alpha^{-n+d/2}; `alpha_plus_one` evaluates the same
/// expression at alpha + 1, which is the convention the reference circle
/// count tables follow.
enum class Normalization { alpha, alpha_plus_one };

/// n!/(2^{d'/2} pi^{d/2}) a^{-n+d/2}, with a = alpha or alpha + 1.
double normalization_factor(int n, int d, int d_prime, double alpha,
                            Normalization convention = Normalization::alpha);

/// Real trigonometric polynomial a(theta) = c_0 + 2 Re sum_{m>=1} c_m e^{2 pi i m theta},
/// so that c_m = int_0^1 a(theta) e^{-2 pi i m theta} d theta and c_{-m} = conj(c_m).
class FourierSymbol {
 public:
  FourierSymbol() = default;
  explicit FourierSymbol(std::vector<Complex> nonnegative_coeffs);

  double operator()(double theta) const;
  Complex coefficient(int m) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

 private:
  std::vector<Complex> coeffs_{Complex(1.0, 0.0)};
};

/// The circle r S^1 in the disc carrying a symbol a(theta) >= 0.
class CircleSymbolModel {
 public:
  static CircleSymbolModel constant_one(double r, double alpha);
  static CircleSymbolModel fourier(double r, double alpha,
                                   std::vector<Complex> nonnegative_coeffs);

  double r() const { return r_; }
  double alpha() const { return alpha_; }
  bool is_constant_one() const { return constant_one_; }
  const FourierSymbol& symbol() const { return symbol_; }
  double symbol_at(double theta) const { return symbol_(theta); }
  Complex fourier_coefficient(int m) const { return symbol_.coefficient(m); }

  /// sup_theta a(theta) on the 4096-point check grid.
  double symbol_sup() const { return symbol_sup_; }
  /// sup a / (1 - r^2)^2: bound for the spectrum of T-hat.
  double norm_bound() const;
  /// dsigma = arc_density * d theta, arc_density = 2 pi r / (1 - r^2).
  double arc_density() const;

  CircleSymbolModel with_alpha(double alpha) const;

 private:
  CircleSymbolModel(double r, double alpha, FourierSymbol symbol, bool constant_one);

  double r_;
  double alpha_;
  FourierSymbol symbol_;
  bool constant_one_;
  double symbol_sup_ = 1.0;
};

/// Eigenvalues of a finite truncation, sorted descending.
struct SpectrumTruncation {
  std::vector<double> eigenvalues;
  int cutoff = 0;              // largest basis index kept
  double tail_estimate = 0.0;  // bound on the sum of omitted eigenvalues
  double alpha = 0.0;
  bool normalized = true;
  Normalization normalization = Normalization::alpha;
};

/// Default truncation index for the circle model:
/// m* + ceil(12 (sqrt(alpha+1) r/(1-r^2) + 50)).
int default_cutoff(double r, double alpha);

/// ln lambda_m for m = 0..M (index order) of the constant-one circle model,
/// lambda_m = sqrt(2 pi/alpha) (1-r^2)^{alpha-1} Gamma(alpha+m+2)/(Gamma(alpha+1) m!) r^{2m+1},
/// generated from lambda_0 by the exact ratio r^2 (alpha+1+m)/m with
/// compensated summation.
std::vector<double> explicit_log_eigenvalues(double r, double alpha, int M,
                                             Normalization convention = Normalization::alpha);

/// Largest index attaining the maximum of a sequence (ties within relative
/// 1e-12 resolve to the larger index).
int argmax_index(const std::vector<double>& log_values);

/// Full truncated spectrum of T-hat_r for a = 1. Pass M < 0 for the default
/// cutoff, which is then extended until lambda_M < 1e-14 lambda_max.
SpectrumTruncation explicit_eigenvalues(const CircleSymbolModel& model, int M = -1,
                                        Normalization convention = Normalization::alpha);

/// <T e_k, e_j> for j, k = 0..M in the orthonormal monomial basis
/// (unnormalized operator):
/// c_alpha (1-r^2)^alpha (2 pi r/(1-r^2)) delta_j delta_k r^{j+k} a_hat(j-k).
Eigen::MatrixXcd matrix_elements(const CircleSymbolModel& model, int M);

/// Hermitian eigenvalues, descending. Throws ContractError if
/// max |A - A^*| >= 1e-12 ||A||_F.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& a);

/// Spectrum of the normalized truncated matrix. M < 0 selects default_cutoff.
SpectrumTruncation toeplitz_spectrum(const CircleSymbolModel& model, int M = -1,
                                     Normalization convention = Normalization::alpha);

/// Phi = i sum_j Log((1 - <xi_j, xi_{j+1}>) / (1 - |xi_j|^2)), indices mod m.
Complex phase_value(const std::vector<BallPoint>& points);

/// prod_j (1 - d_j d_{j+1}) / (1 - d_j^2), indices mod m.
double label_product(const std::vector<double>& d_values);

struct TraceQuadrature {
  double value = 0.0;           // unnormalized Tr(T^m)
  double relative_change = 0.0; // between the last two node counts
  int nodes_per_axis = 0;
  bool resolved = false;        // relative_change < 1e-7 before the cap
};

/// m-fold periodic trapezoid of the composition-trace integrand over
/// theta in [0,1)^m, m in {2, 3}. Node count starts at 16 and doubles up to
/// max_nodes per axis.
TraceQuadrature composition_trace_quadrature(const CircleSymbolModel& model, int m,
                                             int max_nodes = 1024);

/// Same integrand at a fixed node count, with the theta indices rotated by
/// `shift` positions (used to check the cyclic structure).
double composition_trace_fixed(const CircleSymbolModel& model, int m, int nodes,
                               int shift = 0);

}  // namespace szegolab
