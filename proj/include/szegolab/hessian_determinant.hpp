#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "szegolab/geometry.hpp"
#include "szegolab/special_functions.hpp"

namespace szegolab {

/// The (m-1)d x (m-1)d block-tridiagonal matrix O_{m-1}: diagonal blocks 2I,
/// super-diagonal -I - iW, sub-diagonal -I + iW.
template <typename Derived>
Eigen::Matrix<std::complex<typename Derived::RealScalar>, Eigen::Dynamic, Eigen::Dynamic>
build_block_matrix(const Eigen::MatrixBase<Derived>& W, int m) {
  using Real = typename Derived::RealScalar;
  using C = std::complex<Real>;
  using Out = Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic>;
  eigen_assert(W.rows() == W.cols());
  eigen_assert(m >= 2);
  const Eigen::Index d = W.rows();
  const Eigen::Index blocks = m - 1;
  const Out iw = C(0, 1) * W.template cast<C>();
  const Out eye = Out::Identity(d, d);
  Out o = Out::Zero(blocks * d, blocks * d);
  for (Eigen::Index q = 0; q < blocks; ++q) {
    o.block(q * d, q * d, d, d) = Real(2) * eye;
    if (q + 1 < blocks) {
      o.block(q * d, (q + 1) * d, d, d) = -eye - iw;
      o.block((q + 1) * d, q * d, d, d) = -eye + iw;
    }
  }
  return o;
}

/// LU (partial pivoting) determinant.
template <typename Derived>
typename Derived::Scalar det_direct(const Eigen::MatrixBase<Derived>& a) {
  eigen_assert(a.rows() == a.cols());
  if (a.rows() == 0) return typename Derived::Scalar(1);
  return a.eval().partialPivLu().determinant();
}

/// P_{m-1}(W) = sum_{l=0}^{floor((m-1)/2)} C(m, 2l+1) (-1)^l W^{2l}; this is
/// det_R O_{m-1} over the commutative ring generated by I and W.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
block_polynomial(const Eigen::MatrixBase<Derived>& W, int m) {
  using S = typename Derived::Scalar;
  using M = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index d = W.rows();
  const M w2 = W * W;
  M power = M::Identity(d, d);
  M sum = M::Zero(d, d);
  for (int l = 0; 2 * l + 1 <= m; ++l) {
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    sum += S(sign * binomial(m, 2 * l + 1)) * power;
    power = power * w2;
  }
  return sum;
}

template <typename Derived>
typename Derived::Scalar det_via_polynomial(const Eigen::MatrixBase<Derived>& W, int m) {
  return det_direct(block_polynomial(W, m));
}

/// sqrt(det O_{m-1}) = m^{d/2 - r} prod_k ((1+l_k)^m - (1-l_k)^m) / (2 l_k)
/// for the nonzero lambdas l_1..l_r of W.
double sqrt_det_from_lambdas(const std::vector<double>& nonzero_lambdas, int m, int d);

/// Closed forms for isotropic / co-isotropic tangent spaces.
struct ClosedFormDeterminant {
  double sqrt_det = 0.0;  // sqrt(det O_{m-1})
  /// 2^{d(m-1)/2} (det O_{m-1})^{-1/2} = 2^{d'(m-1)/2} m^{-d'/2}
  double unified = 0.0;
  int d_prime = 0;
};

/// Throws UnsupportedError for SymplecticTag::neither.
ClosedFormDeterminant det_closed_form(int m, int n, int d, SymplecticTag tag);

/// d' = d (isotropic), 2n - d (co-isotropic); lagrangian counts as isotropic.
int d_prime(int n, int d, SymplecticTag tag);

/// Random pair (G, H) with G = A^T A + eps I SPD and H = B - B^T skew, drawn
/// from a seeded uniform generator; W = G^{-1} H.
MetricPair random_metric_pair(int d, std::uint64_t seed, double eps = 0.1);

/// W = G^{-1} H with a prescribed set of lambdas (G-skew-adjoint, random G).
MetricPair metric_pair_with_lambdas(int d, const std::vector<double>& lambdas,
                                    std::uint64_t seed);

struct HessdetReport {
  std::complex<double> direct;
  std::complex<double> polynomial;
  double eigen_product = 0.0;  // (sqrt det)^2 from the lambda spectrum
  double max_relative_spread = 0.0;
};

HessdetReport evaluate_determinants(const MetricPair& pair, int m);

}  // namespace szegolab
