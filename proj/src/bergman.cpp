#include "szegolab/bergman.hpp"

#include <cmath>

#include "szegolab/errors.hpp"

namespace szegolab {

BallPoint::BallPoint(Eigen::VectorXcd coords)
    : coords_(std::move(coords)), norm_sq_(coords_.squaredNorm()) {
  if (coords_.size() == 0) throw DomainError("BallPoint: empty coordinates");
  if (!(norm_sq_ < 1.0)) {
    throw DomainError("BallPoint: point must satisfy |z| < 1");
  }
}

BallPoint::BallPoint(std::initializer_list<Complex> coords)
    : BallPoint(Eigen::Map<const Eigen::VectorXcd>(
          coords.begin(), static_cast<Eigen::Index>(coords.size()))) {}

Complex inner(const BallPoint& z, const BallPoint& w) {
  if (z.dim() != w.dim()) throw DomainError("inner: dimension mismatch");
  // Eigen's dot conjugates the first argument.
  return w.coords().dot(z.coords());
}

Complex log_kernel(const WeightedModel& model, const BallPoint& z,
                   const BallPoint& w) {
  const double power = model.n + 1.0 + model.alpha;
  return -power * std::log(1.0 - inner(z, w));
}

Complex kernel(const WeightedModel& model, const BallPoint& z,
               const BallPoint& w) {
  return std::exp(log_kernel(model, z, w));
}

Complex log_normalized_kernel(const WeightedModel& model, const BallPoint& z,
                              const BallPoint& w) {
  const double power = model.n + 1.0 + model.alpha;
  return power * (0.5 * std::log1p(-w.norm_sq()) - std::log(1.0 - inner(z, w)));
}

Complex normalized_kernel(const WeightedModel& model, const BallPoint& z,
                          const BallPoint& w) {
  return std::exp(log_normalized_kernel(model, z, w));
}

double BasisConstant::value() const { return std::exp(log_delta); }

BasisConstant basis_constant(const WeightedModel& model, int m) {
  if (model.n != 1) {
    throw UnsupportedError("basis_constant: only the disc (n = 1) is supported");
  }
  if (m < 0) throw DomainError("basis_constant: m must be >= 0");
  // delta_m^2 = Gamma(m+alpha+2) / (m! Gamma(alpha+2)) = prod_{k=1}^{m} (alpha+1+k)/k
  double log_sq = 0.0;
  for (int k = 1; k <= m; ++k) log_sq += std::log1p((model.alpha + 1.0) / k);
  return BasisConstant{m, 0.5 * log_sq};
}

}  // namespace szegolab
