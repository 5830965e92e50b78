#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "szegolab/bergman.hpp"
#include "szegolab/errors.hpp"
#include "szegolab/quadrature.hpp"

using namespace szegolab;
constexpr double kPi = std::numbers::pi;

namespace {

BallPoint random_point(std::mt19937_64& gen, int n, double radius) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Eigen::VectorXcd v(n);
  for (int j = 0; j < n; ++j) v(j) = Complex(normal(gen), normal(gen));
  v *= radius * std::pow(uniform(gen), 1.0 / (2 * n)) / v.norm();
  return BallPoint(v);
}

}  // namespace

TEST_CASE("BallPoint caches its squared norm and rejects the boundary") {
  BallPoint p{Complex(0.3, 0.4), Complex(0.0, -0.5)};
  CHECK(std::abs(p.norm_sq() - 0.5) < 1e-15);
  CHECK_THROWS_AS((BallPoint{Complex(0.6, 0.8)}), DomainError);
  CHECK_THROWS_AS((BallPoint{Complex(1.0, 0.0), Complex(0.1, 0.0)}), DomainError);
}

TEST_CASE("inner product convention") {
  BallPoint z{Complex(0.0, 0.5)}, w{Complex(0.5, 0.0)};
  // <z,w> = z conj(w)
  CHECK(std::abs(inner(z, w) - Complex(0.0, 0.25)) < 1e-16);
}

TEST_CASE("kernel simple values") {
  const auto m1 = WeightedModel::make(1, 0.0);
  BallPoint half{Complex(0.5, 0.0)}, zero{Complex(0.0, 0.0)};
  CHECK(std::abs(kernel(m1, half, half) - Complex(16.0 / 9.0, 0.0)) < 1e-14);
  const auto m2 = WeightedModel::make(2, 3.7);
  BallPoint z{Complex(0.3, -0.2), Complex(0.1, 0.5)}, o{Complex(0, 0), Complex(0, 0)};
  CHECK(std::abs(kernel(m2, z, o) - 1.0) < 1e-15);
  CHECK(std::abs(kernel(m1, half, zero) - 1.0) < 1e-15);
}

TEST_CASE("kernel matches its power series") {
  const auto model = WeightedModel::make(2, 1.5);
  BallPoint z{Complex(0.3, 0.0), Complex(0.0, 0.1)};
  BallPoint w{Complex(0.0, 0.2), Complex(-0.4, 0.0)};
  const Complex x = inner(z, w);
  const double a = model.n + 1 + model.alpha;
  // sum_j (a)_j / j! x^j
  Complex sum = 0.0, term = 1.0;
  for (int j = 0; j < 200; ++j) {
    sum += term;
    term *= (a + j) / (j + 1.0) * x;
  }
  CHECK(std::abs(kernel(model, z, w) - sum) < 1e-10 * std::abs(sum));
}

TEST_CASE("kernel Hermitian symmetry and positivity") {
  std::mt19937_64 gen(11);
  for (int n : {1, 2, 3}) {
    const auto model = WeightedModel::make(n, 2.25);
    for (int i = 0; i < 200; ++i) {
      const BallPoint z = random_point(gen, n, 0.95), w = random_point(gen, n, 0.95);
      const Complex kzw = kernel(model, z, w), kwz = kernel(model, w, z);
      CHECK(std::abs(kzw - std::conj(kwz)) < 1e-14 * std::abs(kzw));
      const Complex kzz = kernel(model, z, z);
      CHECK(std::abs(kzz.imag()) < 1e-14 * kzz.real());
      CHECK(kzz.real() >= 1.0);
      CHECK(kzz.real() ==
            doctest::Approx(std::pow(1.0 - z.norm_sq(), -(n + 1 + model.alpha))).epsilon(1e-13));
    }
  }
}

TEST_CASE("normalized kernel") {
  std::mt19937_64 gen(5);
  const auto model = WeightedModel::make(2, 4.0);
  const double power = model.n + 1 + model.alpha;
  for (int i = 0; i < 300; ++i) {
    const BallPoint z = random_point(gen, 2, 0.9), w = random_point(gen, 2, 0.9);
    const Complex kww = normalized_kernel(model, w, w);
    CHECK(std::abs(kww - std::pow(1.0 - w.norm_sq(), -power / 2)) < 1e-12 * std::abs(kww));
    const double bound = std::pow(1.0 - z.norm_sq(), power) * std::norm(normalized_kernel(model, z, w));
    CHECK(bound <= 1.0 + 1e-12);
    CHECK(bound < 1.0 - 1e-9);
    CHECK(std::pow(1.0 - w.norm_sq(), power) * std::norm(kww) == doctest::Approx(1.0).epsilon(1e-12));
  }
  BallPoint z{Complex(0.4, 0.1), Complex(0.2, 0.2)}, o{Complex(0, 0), Complex(0, 0)};
  CHECK(std::abs(normalized_kernel(model, z, o) - 1.0) < 1e-15);
}

TEST_CASE("basis constants") {
  CHECK(basis_constant(WeightedModel::make(1, 3.0), 0).value() == 1.0);
  CHECK(basis_constant(WeightedModel::make(1, 0.0), 1).value() ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  // mpmath: Gamma(m+alpha+2)/(m! Gamma(alpha+2))
  CHECK(std::pow(basis_constant(WeightedModel::make(1, 2.5), 4).value(), 2) ==
        doctest::Approx(50.2734375).epsilon(1e-14));
  CHECK(std::pow(basis_constant(WeightedModel::make(1, 0.5), 10).value(), 2) ==
        doctest::Approx(28.367725372314453125).epsilon(1e-14));
  CHECK_THROWS_AS(basis_constant(WeightedModel::make(2, 1.0), 1), UnsupportedError);
}

TEST_CASE("basis vectors have unit norm (radial quadrature)") {
  // ||z^m||^2 = c_alpha int_D |z|^{2m} (1-|z|^2)^alpha dA/pi
  //          = c_alpha int_0^1 2 rho^{2m+1} (1-rho^2)^alpha d rho
  for (auto [alpha, m] : {std::pair{100.0, 50}, {0.0, 3}, {7.5, 12}}) {
    const auto model = WeightedModel::make(1, alpha);
    const double delta = basis_constant(model, m).value();
    const auto norm = quad::tanh_sinh(
        [&](double rho) {
          return 2.0 * std::pow(rho, 2 * m + 1) * std::pow(1.0 - rho * rho, alpha);
        },
        0.0, 1.0, 1e-13, 12);
    CAPTURE(alpha);
    CHECK(std::abs(model.c_alpha * delta * delta * norm.value - 1.0) < 1e-8);
  }
}

TEST_CASE("reproducing property on the disc") {
  // f = e_k; c_alpha int_D K(z,w) f(w) (1-|w|^2)^alpha dA(w)/pi = f(z)
  for (double alpha : {0.0, 2.0, 10.0}) {
    const auto model = WeightedModel::make(1, alpha);
    const int k = 3;
    const double delta = basis_constant(model, k).value();
    const BallPoint z{Complex(0.3, -0.35)};
    const auto rule = quad::gauss_legendre(40);
    const int angles = 64;
    Complex sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double rho = 0.5 * (rule.nodes[i] + 1.0);
      const double wr = 0.5 * rule.weights[i];
      for (int a = 0; a < angles; ++a) {
        const Complex w = std::polar(rho, 2 * kPi * a / angles);
        const Complex f = delta * std::pow(w, k);
        sum += wr / angles * 2.0 * rho * std::pow(1.0 - rho * rho, alpha) *
               kernel(model, z, BallPoint{w}) * f;
      }
    }
    const Complex fz = delta * std::pow(z.coords()(0), k);
    CAPTURE(alpha);
    CHECK(std::abs(model.c_alpha * sum - fz) < 1e-6 * std::abs(fz));
  }
}
