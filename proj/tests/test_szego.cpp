#include <doctest.h>

#include <cmath>
#include <numbers>

#include "szegolab/errors.hpp"
#include "szegolab/quadrature.hpp"
#include "szegolab/szego.hpp"

using namespace szegolab;
constexpr double kPi = std::numbers::pi;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("Q transform of monomials") {
  for (double p : {0.3, 1.0, 2.0, 5.0}) {
    const Phi phi = Phi::power(p);
    for (double eps : {0.5, 1.0, 1.5}) {
      for (double t : {0.1, 1.0, 7.0}) {
        CAPTURE(p);
        CAPTURE(eps);
        CAPTURE(t);
        const double expected = std::pow(t, p) / std::pow(p, eps);
        CHECK(rel(q_transform({eps, phi}, t), expected) < 1e-8);
        CHECK(rel(q_transform_monomial_rule(phi, eps, t), expected) < 1e-15);
      }
    }
  }
}

TEST_CASE("Q transform identity, linearity and errors") {
  const Phi wavy = Phi::callable([](double s) { return s * (2.0 + std::sin(s)); }, 1.0, "wavy");
  for (double t : {0.2, 3.0}) CHECK(q_transform({0.0, wavy}, t) == wavy(t));

  const Phi poly = Phi::polynomial({2.0, 3.0});
  for (double eps : {0.5, 1.5}) {
    for (double t : {0.3, 2.0}) {
      const double combo = 2.0 * q_transform({eps, Phi::power(1.0)}, t) +
                           3.0 * q_transform({eps, Phi::power(2.0)}, t);
      CHECK(std::abs(q_transform({eps, poly}, t) - combo) < 1e-10 * std::abs(combo));
    }
  }
  CHECK_THROWS_AS(q_transform({-0.5, wavy}, 1.0), DomainError);
  CHECK_THROWS_AS(q_transform({0.5, wavy}, 0.0), DomainError);
}

TEST_CASE("phi specs") {
  const Phi a = Phi::parse("pow:0.5");
  CHECK(a(4.0) == doctest::Approx(2.0));
  CHECK(a.p == 0.5);
  const Phi b = Phi::parse("poly:1,0,2");
  CHECK(b(2.0) == doctest::Approx(2.0 + 16.0));
  CHECK(b.p == 1.0);
  CHECK(Phi::parse("poly:0,3").p == 2.0);
  CHECK_THROWS_AS(Phi::parse("exp:1"), DomainError);
  CHECK_THROWS_AS(Phi::parse("pow:x"), DomainError);
  CHECK_THROWS_AS(Phi::parse("pow:-1"), DomainError);
  CHECK_THROWS_AS(Phi::parse("poly:0,0"), DomainError);
}

TEST_CASE("Szego right-hand side for the circle") {
  const double r = 0.5;
  const auto model = CircleSymbolModel::constant_one(r, 10.0);
  for (int m = 1; m <= 4; ++m) {
    const double expected = 1.0 / std::sqrt(2.0 * m) * std::pow(1 - r * r, -2.0 * m) * 2 * kPi * r /
                            (1 - r * r);
    CHECK(rel(szego_rhs(model, Phi::power(m)), expected) < 1e-10);
  }
  const double hand = (1.0 / std::sqrt(2.0)) * (16.0 / 9.0) * (4.0 * kPi / 3.0);
  CHECK(rel(szego_rhs(model, Phi::power(1.0)), hand) < 1e-12);

  // polynomials are the matching combination of monomials
  const double combo = 0.5 * szego_rhs(model, Phi::power(1)) - 0.25 * szego_rhs(model, Phi::power(2)) +
                       2.0 * szego_rhs(model, Phi::power(3));
  CHECK(std::abs(szego_rhs(model, Phi::polynomial({0.5, -0.25, 2.0})) - combo) <
        1e-10 * std::abs(combo));

  // p = 1/2 lines up with the Schatten limit: rhs = limit^{1/2}
  const double half = szego_rhs(model, Phi::power(0.5));
  CHECK(std::isfinite(half));
  CHECK(rel(half, std::sqrt(schatten_limit(model, 0.5))) < 1e-10);
}

TEST_CASE("Szego right-hand side for a curve chart") {
  const double r = 0.5;
  const auto model = CircleSymbolModel::constant_one(r, 10.0);
  const auto curve = charts::circle(r);
  for (double p : {1.0, 2.0, 0.5}) {
    CHECK(rel(szego_rhs_curve(curve, [](double) { return 1.0; }, Phi::power(p)),
              szego_rhs(model, Phi::power(p))) < 1e-8);
  }
  // non-constant symbol, through the Fourier model
  const auto fm = CircleSymbolModel::fourier(r, 10.0, {Complex(1, 0), Complex(0.2, 0.1)});
  const double viacurve =
      szego_rhs_curve(curve, [&](double t) { return fm.symbol_at(t); }, Phi::power(2.0));
  CHECK(rel(viacurve, szego_rhs(fm, Phi::power(2.0))) < 1e-6);
  CHECK_THROWS_AS(szego_rhs_curve(charts::sphere3(0.5), [](double) { return 1.0; }, Phi::power(1)),
                  UnsupportedError);
}

TEST_CASE("count prediction") {
  const auto t1 = count_prediction(0.5, 16.0 / 15.0, 16.0 / 9.0);
  CHECK(std::abs(t1.limit - 2.3887) < 5e-4);
  CHECK(rel(t1.limit, 2.388718690949818) < 1e-12);
  CHECK_FALSE(t1.estimate.has_value());
  const auto t2 = count_prediction(1.0 / std::sqrt(2.0), 0.4, 0.6, 1e4);
  CHECK(std::abs(t2.limit - 0.9930) < 5e-4);
  CHECK(rel(t2.limit, 0.993051596333195) < 1e-12);
  CHECK(rel(*t2.estimate, t2.limit * std::sqrt(1e4 / kPi)) < 1e-15);
  CHECK(count_prediction(0.5, 1.2, 1.2).limit == 0.0);
  CHECK_THROWS_AS(count_prediction(0.5, 1.0, 1.8), DomainError);
  CHECK_THROWS_AS(count_prediction(0.5, 1.5, 1.2), DomainError);
  CHECK_THROWS_AS(count_prediction(1.5, 0.1, 0.2), DomainError);
}

TEST_CASE("count prediction equals the integrated density") {
  struct Case { double r, t1, t2; };
  for (const auto& c : {Case{0.5, 16.0 / 15.0, 16.0 / 9.0}, Case{1 / std::sqrt(2.0), 0.4, 0.6},
                        Case{0.3, 0.2, 1.1}}) {
    const auto integral = quad::tanh_sinh([&](double s) { return eigenvalue_density(c.r, s); },
                                          c.t1, c.t2, 1e-12, 12);
    CHECK(rel(integral.value / std::sqrt(2.0), count_prediction(c.r, c.t1, c.t2).limit) < 1e-6);
  }
}

TEST_CASE("Schatten limit") {
  const double r = 0.5;
  const auto model = CircleSymbolModel::constant_one(r, 10.0);
  const double p1 = (1 / std::sqrt(2.0)) * (2 * kPi * 0.5 / 0.75) * (16.0 / 9.0);
  CHECK(rel(schatten_limit(model, 1.0), p1) < 1e-13);
  for (double p : {0.5, 1.0, 2.0, 4.0}) {
    const double v = schatten_limit(model, p);
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
  }
  CHECK(rel(schatten_limit(model, 2.0), std::sqrt(szego_rhs(model, Phi::power(2)))) < 1e-12);
  CHECK_THROWS_AS(schatten_limit(model, 0.0), DomainError);
}

TEST_CASE("eigen counts use closed intervals") {
  SpectrumTruncation s;
  s.eigenvalues = {3.0, 2.0, 1.0, 0.5};
  s.alpha = 1.0;
  CHECK(eigen_count(s, 1.0, 2.0) == 2);
  CHECK(eigen_count(s, 1.0, 1.0) == 1);
  CHECK(eigen_count(s, 4.0, 5.0) == 0);
}

TEST_CASE("table counts through the scan") {
  const std::vector<double> grid = {100, 1e5};
  const auto r1 = convergence_scan(CircleSymbolModel::constant_one(0.5, 100),
                                   Interval{16.0 / 15.0, 16.0 / 9.0}, grid,
                                   Normalization::alpha_plus_one);
  CHECK(*r1[0].count_N == 14);
  CHECK(*r1[1].count_N == 426);
  CHECK(r1[0].rhs_limit == r1[1].rhs_limit);
  const auto r2 = convergence_scan(CircleSymbolModel::constant_one(1 / std::sqrt(2.0), 100),
                                   Interval{0.4, 0.6}, {1e4});
  CHECK(*r2[0].count_N == 56);
}

TEST_CASE("count convergence trend over the table grids") {
  const std::vector<double> grid = {100, 500, 1e3, 5e3, 1e4, 5e4, 1e5};
  auto inversions = [&](double r, Interval interval) {
    const auto rows = convergence_scan(CircleSymbolModel::constant_one(r, 100), interval, grid,
                                       Normalization::alpha_plus_one);
    int count = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double prev = std::abs(rows[i - 1].lhs_scaled - rows[i - 1].rhs_limit);
      const double cur = std::abs(rows[i].lhs_scaled - rows[i].rhs_limit);
      if (cur > prev) ++count;
    }
    const double first = std::abs(rows.front().lhs_scaled - rows.front().rhs_limit);
    const double last = std::abs(rows.back().lhs_scaled - rows.back().rhs_limit);
    CHECK(last < 0.05 * first);
    return count;
  };
  // The reference r = 1/2 column already steps away from the limit at
  // alpha = 1e3 and 1e4; the r = 1/sqrt2 column does so once, at 5e4.
  CHECK(inversions(0.5, Interval{16.0 / 15.0, 16.0 / 9.0}) == 2);
  CHECK(inversions(1 / std::sqrt(2.0), Interval{0.4, 0.6}) == 1);
}

TEST_CASE("trace scan for phi = s^2") {
  const auto rows = convergence_scan(CircleSymbolModel::constant_one(0.5, 1.0), Phi::power(2),
                                     {1e3, 1e4, 1e5});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].alpha == 1e3);
  CHECK(rows[2].alpha == 1e5);
  CHECK(std::abs(rows[2].lhs_scaled / rows[2].rhs_limit - 1.0) < 0.01);
  CHECK_FALSE(rows[0].count_N.has_value());
}

TEST_CASE("small-p boundedness") {
  const auto model = CircleSymbolModel::constant_one(0.5, 1.0);
  const std::vector<double> grid = {1e2, 1e3, 1e4, 1e5};
  for (double p : {0.5, 0.9}) {
    const auto seq = boundedness_scan_small_p(model, p, grid);
    const double final_value = seq.back();
    for (double v : seq) CHECK(v <= 1.1 * final_value);
    const double closed = std::pow(schatten_limit(model, p), p);
    CHECK(std::abs(final_value / closed - 1.0) < 0.02);
  }
  CHECK_THROWS_AS(boundedness_scan_small_p(model, 1.5, grid), DomainError);
}

TEST_CASE("norm asymptote") {
  const auto a = norm_asymptote(1 / std::sqrt(2.0));
  CHECK(a.limit == doctest::Approx(4.0).epsilon(1e-14));
  for (double alpha : {10.0, 100.0, 1e5}) CHECK(a.m_star(alpha) == static_cast<long long>(alpha + 1));
  const auto b = norm_asymptote(0.5);
  CHECK(b.limit == doctest::Approx(16.0 / 9.0).epsilon(1e-14));
  for (double alpha : {10.0, 500.0, 1e3, 1e5}) {
    CHECK(b.m_star(alpha) == static_cast<long long>(alpha + 1) / 3);
  }
  const auto s = explicit_eigenvalues(CircleSymbolModel::constant_one(1 / std::sqrt(2.0), 1e5));
  CHECK(std::abs(s.eigenvalues.front() / 4.0 - 1.0) < 0.01);
}
