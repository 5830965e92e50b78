#pragma once

#include <complex>
#include <initializer_list>

#include <Eigen/Core>

#include "szegolab/special_functions.hpp"

namespace szegolab {

using Complex = std::complex<double>;

/// A point of the unit ball B_n, with |z|^2 cached at construction.
class BallPoint {
 public:
  explicit BallPoint(Eigen::VectorXcd coords);
  BallPoint(std::initializer_list<Complex> coords);

  const Eigen::VectorXcd& coords() const { return coords_; }
  double norm_sq() const { return norm_sq_; }
  int dim() const { return static_cast<int>(coords_.size()); }

 private:
  Eigen::VectorXcd coords_;
  double norm_sq_;
};

/// <z, w> = sum z_j conj(w_j).
Complex inner(const BallPoint& z, const BallPoint& w);

/// Principal log of the weighted Bergman kernel, -(n+1+alpha) Log(1 - <z,w>).
/// 1 - <z,w> has positive real part inside the ball, so the principal branch
/// is continuous there.
Complex log_kernel(const WeightedModel& model, const BallPoint& z,
                   const BallPoint& w);
Complex kernel(const WeightedModel& model, const BallPoint& z,
               const BallPoint& w);

/// k_w(z) = ((1-|w|^2)^{1/2} / (1 - <z,w>))^{n+1+alpha}.
Complex log_normalized_kernel(const WeightedModel& model, const BallPoint& z,
                              const BallPoint& w);
Complex normalized_kernel(const WeightedModel& model, const BallPoint& z,
                          const BallPoint& w);

/// delta_m with e_m(z) = delta_m z^m orthonormal in A^2_alpha(D); n = 1 only.
struct BasisConstant {
  int m = 0;
  double log_delta = 0.0;

  double value() const;
};

BasisConstant basis_constant(const WeightedModel& model, int m);

}  // namespace szegolab
