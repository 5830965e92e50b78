#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "szegolab/bergman.hpp"

namespace szegolab {

/// A d-dimensional chart gamma: (0,1)^d -> B_n. The Jacobian is taken from
/// `jacobian` when supplied, otherwise from central differences of `chart`.
struct ChartedSubmanifold {
  std::string name;
  int n = 1;
  int d = 1;
  std::function<Eigen::VectorXcd(const Eigen::VectorXd&)> chart;
  std::function<Eigen::MatrixXcd(const Eigen::VectorXd&)> jacobian;
  double fd_step = 1e-5;

  BallPoint point(const Eigen::VectorXd& t) const;
  /// n x d matrix with columns d/dt_j gamma(t).
  Eigen::MatrixXcd jacobian_at(const Eigen::VectorXd& t) const;
};

/// G: pullback Riemannian metric; H: pullback of omega; W = G^{-1} H.
struct MetricPair {
  Eigen::MatrixXd G;
  Eigen::MatrixXd H;
  Eigen::MatrixXd W;
};

enum class SymplecticTag { isotropic, coisotropic, lagrangian, neither };

std::string to_string(SymplecticTag tag);

struct SymplecticClass {
  SymplecticTag tag = SymplecticTag::neither;
  std::vector<double> lambda_spectrum;  // nonzero lambda_k, ascending
  int r = 0;                            // half-rank of W
  int zero_multiplicity = 0;            // d - 2r
};

/// Bergman Hermitian metric b_{jk}(p) = delta_{jk}/(1-|p|^2) +
/// conj(p_j) p_k/(1-|p|^2)^2. Independent of alpha.
Eigen::MatrixXcd ambient_metric(const BallPoint& p);

/// g_{jk} + i h_{jk} = sum_{l,r} b_{lr} d_j gamma_l conj(d_k gamma_r).
/// Throws RankError when G is not numerically positive-definite.
MetricPair pullback_forms(const ChartedSubmanifold& manifold,
                          const Eigen::VectorXd& t);

/// The floor(d/2) values lambda with W ~ +-i lambda (zeros included),
/// ascending. Computed from the skew matrix S = L^{-1} H L^{-T} (G = L L^T)
/// through the symmetric problem S^T S, whose eigenvalues are lambda^2 twice.
std::vector<double> symplectic_lambdas(const MetricPair& pair);

SymplecticClass classify(const MetricPair& pair, int n, int d,
                         double tol = 1e-4);

/// Classifies at every sample point and returns the class only if all agree
/// (otherwise the tag is `neither` and the spectrum is from the first point).
SymplecticClass classify_chart(const ChartedSubmanifold& manifold,
                               const std::vector<Eigen::VectorXd>& samples,
                               double tol = 1e-4);

namespace charts {

/// gamma(theta) = r e^{2 pi i theta} in the disc.
ChartedSubmanifold circle(double r);
/// The sphere |z| = r in B_2 (d = 3) in Hopf-like coordinates.
ChartedSubmanifold sphere3(double r);
/// An open box inside B_2 (d = 4 = 2n).
ChartedSubmanifold open_ball();
/// gamma(t1, t2) = (t1/2, t2/2 + i t1 t2 / 4) in B_2.
ChartedSubmanifold generic2d();

/// Registry lookup: "circle", "sphere3", "open-ball", "generic2d".
ChartedSubmanifold by_name(const std::string& name, double r = 0.5);
std::vector<std::string> names();

/// Deterministic interior sample points of (0,1)^d.
std::vector<Eigen::VectorXd> sample_points(int d, int count = 5);

}  // namespace charts

}  // namespace szegolab
