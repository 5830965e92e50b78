#include "szegolab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "szegolab/errors.hpp"

namespace szegolab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
}  // namespace

BallPoint ChartedSubmanifold::point(const Eigen::VectorXd& t) const {
  return BallPoint(chart(t));
}

Eigen::MatrixXcd ChartedSubmanifold::jacobian_at(const Eigen::VectorXd& t) const {
  if (t.size() != d) throw DomainError("jacobian_at: chart point has wrong size");
  if (jacobian) return jacobian(t);
  Eigen::MatrixXcd jac(n, d);
  for (int j = 0; j < d; ++j) {
    Eigen::VectorXd plus = t;
    Eigen::VectorXd minus = t;
    plus(j) += fd_step;
    minus(j) -= fd_step;
    jac.col(j) = (chart(plus) - chart(minus)) / (2.0 * fd_step);
  }
  return jac;
}

std::string to_string(SymplecticTag tag) {
  switch (tag) {
    case SymplecticTag::isotropic: return "isotropic";
    case SymplecticTag::coisotropic: return "co-isotropic";
    case SymplecticTag::lagrangian: return "lagrangian";
    case SymplecticTag::neither: return "neither";
  }
  return "neither";
}

Eigen::MatrixXcd ambient_metric(const BallPoint& p) {
  const double s = 1.0 - p.norm_sq();
  const Eigen::VectorXcd& z = p.coords();
  // (conj(p) p^T)_{jk} = conj(p_j) p_k
  Eigen::MatrixXcd b = z.conjugate() * z.transpose() / (s * s);
  b.diagonal().array() += 1.0 / s;
  return b;
}

MetricPair pullback_forms(const ChartedSubmanifold& manifold,
                          const Eigen::VectorXd& t) {
  const BallPoint p = manifold.point(t);
  const Eigen::MatrixXcd jac = manifold.jacobian_at(t);
  const Eigen::MatrixXcd b = ambient_metric(p);
  // M_{jk} = sum_{l,r} J_{lj} b_{lr} conj(J_{rk})
  const Eigen::MatrixXcd m = jac.transpose() * b * jac.conjugate();

  MetricPair pair;
  pair.G = 0.5 * (m.real() + m.real().transpose());
  pair.H = 0.5 * (m.imag() - m.imag().transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(pair.G, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() <= 1e-10) {
    throw RankError("pullback_forms: degenerate chart, G is not positive-definite");
  }
  pair.W = pair.G.llt().solve(pair.H);
  return pair;
}

std::vector<double> symplectic_lambdas(const MetricPair& pair) {
  const Eigen::Index d = pair.G.rows();
  Eigen::LLT<Eigen::MatrixXd> llt(pair.G);
  if (llt.info() != Eigen::Success) {
    throw RankError("symplectic_lambdas: G is not positive-definite");
  }
  const Eigen::MatrixXd l = llt.matrixL();
  // S = L^{-1} H L^{-T} is skew and similar to L^T W L^{-T}.
  const Eigen::MatrixXd left = l.triangularView<Eigen::Lower>().solve(pair.H);
  const Eigen::MatrixXd s =
      l.triangularView<Eigen::Lower>().solve(left.transpose()).transpose();
  const Eigen::MatrixXd sts = s.transpose() * s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sts, Eigen::EigenvaluesOnly);
  std::vector<double> sq(eig.eigenvalues().data(), eig.eigenvalues().data() + d);
  std::sort(sq.begin(), sq.end(), std::greater<>());

  std::vector<double> lambdas;
  for (Eigen::Index k = 0; k + 1 < d; k += 2) {
    const double mean_sq = 0.5 * (sq[k] + sq[k + 1]);
    lambdas.push_back(std::sqrt(std::max(0.0, mean_sq)));
  }
  std::sort(lambdas.begin(), lambdas.end());
  return lambdas;
}

SymplecticClass classify(const MetricPair& pair, int n, int d, double tol) {
  if (n < 1 || d < 1 || d > 2 * n) {
    throw DomainError("classify: need 1 <= d <= 2n");
  }
  if (pair.G.rows() != d) throw DomainError("classify: metric size does not match d");

  const std::vector<double> lambdas = symplectic_lambdas(pair);
  SymplecticClass out;
  int near_zero = 0;
  int near_one = 0;
  for (double lambda : lambdas) {
    if (lambda < tol) {
      ++near_zero;
    } else {
      out.lambda_spectrum.push_back(lambda);
      if (std::abs(lambda - 1.0) < tol) ++near_one;
    }
  }
  out.r = static_cast<int>(out.lambda_spectrum.size());
  out.zero_multiplicity = d - 2 * out.r;

  const int pairs = static_cast<int>(lambdas.size());
  const bool isotropic = near_zero == pairs;
  const bool coisotropic =
      d >= n && near_one == d - n && near_one + near_zero == pairs;
  if (isotropic && d == n) {
    out.tag = SymplecticTag::lagrangian;
  } else if (isotropic) {
    out.tag = SymplecticTag::isotropic;
  } else if (coisotropic) {
    out.tag = SymplecticTag::coisotropic;
  } else {
    out.tag = SymplecticTag::neither;
  }
  return out;
}

SymplecticClass classify_chart(const ChartedSubmanifold& manifold,
                               const std::vector<Eigen::VectorXd>& samples,
                               double tol) {
  if (samples.empty()) throw DomainError("classify_chart: no sample points");
  SymplecticClass first;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const SymplecticClass cls =
        classify(pullback_forms(manifold, samples[i]), manifold.n, manifold.d, tol);
    if (i == 0) {
      first = cls;
    } else if (cls.tag != first.tag) {
      first.tag = SymplecticTag::neither;
      return first;
    }
  }
  return first;
}

namespace charts {

ChartedSubmanifold circle(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("circle: r must lie in (0,1)");
  ChartedSubmanifold c;
  c.name = "circle";
  c.n = 1;
  c.d = 1;
  c.chart = [r](const Eigen::VectorXd& t) {
    Eigen::VectorXcd z(1);
    z(0) = std::polar(r, kTwoPi * t(0));
    return z;
  };
  c.jacobian = [r](const Eigen::VectorXd& t) {
    Eigen::MatrixXcd j(1, 1);
    j(0, 0) = kI * kTwoPi * std::polar(r, kTwoPi * t(0));
    return j;
  };
  return c;
}

ChartedSubmanifold sphere3(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("sphere3: r must lie in (0,1)");
  ChartedSubmanifold c;
  c.name = "sphere3";
  c.n = 2;
  c.d = 3;
  c.chart = [r](const Eigen::VectorXd& t) {
    const double eta = 0.5 * std::numbers::pi * t(0);
    Eigen::VectorXcd z(2);
    z(0) = std::polar(r * std::cos(eta), kTwoPi * t(1));
    z(1) = std::polar(r * std::sin(eta), kTwoPi * t(2));
    return z;
  };
  return c;
}

ChartedSubmanifold open_ball() {
  ChartedSubmanifold c;
  c.name = "open-ball";
  c.n = 2;
  c.d = 4;
  c.chart = [](const Eigen::VectorXd& t) {
    Eigen::VectorXcd z(2);
    z(0) = Complex(0.6 * (t(0) - 0.5), 0.6 * (t(1) - 0.5));
    z(1) = Complex(0.6 * (t(2) - 0.5), 0.6 * (t(3) - 0.5));
    return z;
  };
  return c;
}

ChartedSubmanifold generic2d() {
  ChartedSubmanifold c;
  c.name = "generic2d";
  c.n = 2;
  c.d = 2;
  c.chart = [](const Eigen::VectorXd& t) {
    Eigen::VectorXcd z(2);
    z(0) = Complex(0.5 * t(0), 0.0);
    z(1) = Complex(0.5 * t(1), 0.25 * t(0) * t(1));
    return z;
  };
  return c;
}

ChartedSubmanifold by_name(const std::string& name, double r) {
  if (name == "circle") return circle(r);
  if (name == "sphere3") return sphere3(r);
  if (name == "open-ball") return open_ball();
  if (name == "generic2d") return generic2d();
  throw DomainError("unknown chart '" + name + "'");
}

std::vector<std::string> names() {
  return {"circle", "sphere3", "open-ball", "generic2d"};
}

std::vector<Eigen::VectorXd> sample_points(int d, int count) {
  // Low-discrepancy (Kronecker) points kept away from the cube faces.
  std::vector<Eigen::VectorXd> out;
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd t(d);
    for (int j = 0; j < d; ++j) {
      const double frac = std::fmod((i + 1) * std::sqrt(2.0 + 3.0 * j), 1.0);
      t(j) = 0.15 + 0.7 * frac;
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace charts

}  // namespace szegolab
