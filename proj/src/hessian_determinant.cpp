#include "szegolab/hessian_determinant.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Cholesky>
#include <Eigen/QR>

#include "szegolab/errors.hpp"

namespace szegolab {

double sqrt_det_from_lambdas(const std::vector<double>& nonzero_lambdas, int m, int d) {
  if (m < 2) throw DomainError("sqrt_det_from_lambdas: m must be >= 2");
  const int r = static_cast<int>(nonzero_lambdas.size());
  if (2 * r > d) throw DomainError("sqrt_det_from_lambdas: too many lambdas for d");
  double log_value = (0.5 * d - r) * std::log(static_cast<double>(m));
  for (double lambda : nonzero_lambdas) {
    const double factor =
        (std::pow(1.0 + lambda, m) - std::pow(1.0 - lambda, m)) / (2.0 * lambda);
    log_value += std::log(factor);
  }
  return std::exp(log_value);
}

int d_prime(int n, int d, SymplecticTag tag) {
  switch (tag) {
    case SymplecticTag::isotropic:
    case SymplecticTag::lagrangian:
      return d;
    case SymplecticTag::coisotropic:
      return 2 * n - d;
    case SymplecticTag::neither:
      break;
  }
  throw UnsupportedError("d_prime: submanifold is neither isotropic nor co-isotropic");
}

ClosedFormDeterminant det_closed_form(int m, int n, int d, SymplecticTag tag) {
  if (m < 2) throw DomainError("det_closed_form: m must be >= 2");
  if (tag == SymplecticTag::neither) {
    throw UnsupportedError("det_closed_form: no closed form for class 'neither'");
  }
  ClosedFormDeterminant out;
  out.d_prime = d_prime(n, d, tag);
  const double log_m = std::log(static_cast<double>(m));
  const double ln2 = std::log(2.0);
  double log_sqrt = 0.0;
  if (tag == SymplecticTag::coisotropic) {
    log_sqrt = (d - n) * (m - 1) * ln2 + (n - 0.5 * d) * log_m;
  } else {
    log_sqrt = 0.5 * d * log_m;
  }
  out.sqrt_det = std::exp(log_sqrt);
  out.unified = std::exp(0.5 * d * (m - 1) * ln2 - log_sqrt);
  return out;
}

MetricPair random_metric_pair(int d, std::uint64_t seed, double eps) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Eigen::MatrixXd a(d, d);
  Eigen::MatrixXd b(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = unif(rng);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) b(i, j) = unif(rng);
  MetricPair pair;
  pair.G = a.transpose() * a + eps * Eigen::MatrixXd::Identity(d, d);
  pair.H = b - b.transpose();
  pair.W = pair.G.llt().solve(pair.H);
  return pair;
}

MetricPair metric_pair_with_lambdas(int d, const std::vector<double>& lambdas,
                                    std::uint64_t seed) {
  if (2 * static_cast<int>(lambdas.size()) > d) {
    throw DomainError("metric_pair_with_lambdas: too many lambdas for d");
  }
  // Canonical skew form K with blocks [[0,-l],[l,0]], conjugated by a random
  // invertible L: G = L L^T, H = L K L^T, so that L^{-1} H L^{-T} = K.
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const int j = static_cast<int>(2 * i);
    k(j, j + 1) = -lambdas[i];
    k(j + 1, j) = lambdas[i];
  }
  const MetricPair base = random_metric_pair(d, seed);
  const Eigen::MatrixXd l = base.G.llt().matrixL();
  MetricPair pair;
  pair.G = base.G;
  pair.H = l * k * l.transpose();
  pair.H = 0.5 * (pair.H - pair.H.transpose());
  pair.W = pair.G.llt().solve(pair.H);
  return pair;
}

HessdetReport evaluate_determinants(const MetricPair& pair, int m) {
  const int d = static_cast<int>(pair.W.rows());
  HessdetReport report;
  report.direct = det_direct(build_block_matrix(pair.W, m));
  report.polynomial = det_via_polynomial(pair.W, m);

  std::vector<double> nonzero;
  for (double lambda : symplectic_lambdas(pair)) {
    if (lambda > 1e-12) nonzero.push_back(lambda);
  }
  const double root = sqrt_det_from_lambdas(nonzero, m, d);
  report.eigen_product = root * root;

  const std::complex<double> values[] = {report.direct, report.polynomial,
                                         {report.eigen_product, 0.0}};
  for (const auto& x : values) {
    for (const auto& y : values) {
      const double scale = std::max(std::abs(x), std::abs(y));
      if (scale > 0.0) {
        report.max_relative_spread =
            std::max(report.max_relative_spread, std::abs(x - y) / scale);
      }
    }
  }
  return report;
}

}  // namespace szegolab
