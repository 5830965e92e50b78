#include "szegolab/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "szegolab/errors.hpp"
#include "szegolab/parallel.hpp"
#include "szegolab/special_functions.hpp"

namespace szegolab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kSymbolGrid = 4096;

// Neumaier compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double effective_alpha(double alpha, Normalization convention) {
  return convention == Normalization::alpha ? alpha : alpha + 1.0;
}

}  // namespace

double normalization_factor(int n, int d, int d_prime, double alpha,
                            Normalization convention) {
  const double a = effective_alpha(alpha, convention);
  if (!(a > 0.0)) throw DomainError("normalization_factor: alpha must be positive");
  const double log_value = log_gamma(n + 1.0) - 0.5 * d_prime * std::log(2.0) -
                           0.5 * d * std::log(kPi) + (-n + 0.5 * d) * std::log(a);
  return std::exp(log_value);
}

FourierSymbol::FourierSymbol(std::vector<Complex> nonnegative_coeffs)
    : coeffs_(std::move(nonnegative_coeffs)) {
  if (coeffs_.empty()) throw DomainError("FourierSymbol: need at least c_0");
  if (std::abs(coeffs_[0].imag()) > 1e-14 * std::max(1.0, std::abs(coeffs_[0]))) {
    throw DomainError("FourierSymbol: c_0 must be real for a real symbol");
  }
  coeffs_[0] = Complex(coeffs_[0].real(), 0.0);
}

double FourierSymbol::operator()(double theta) const {
  double value = coeffs_[0].real();
  for (std::size_t m = 1; m < coeffs_.size(); ++m) {
    value += 2.0 * (coeffs_[m] * std::polar(1.0, kTwoPi * m * theta)).real();
  }
  return value;
}

Complex FourierSymbol::coefficient(int m) const {
  const auto k = static_cast<std::size_t>(std::abs(m));
  if (k >= coeffs_.size()) return {0.0, 0.0};
  return m >= 0 ? coeffs_[k] : std::conj(coeffs_[k]);
}

CircleSymbolModel::CircleSymbolModel(double r, double alpha, FourierSymbol symbol,
                                     bool constant_one)
    : r_(r), alpha_(alpha), symbol_(std::move(symbol)), constant_one_(constant_one) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("CircleSymbolModel: r must lie in (0,1)");
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw DomainError("CircleSymbolModel: alpha must be > -1");
  }
  double sup = -std::numeric_limits<double>::infinity();
  double inf = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kSymbolGrid; ++i) {
    const double value = symbol_(static_cast<double>(i) / kSymbolGrid);
    sup = std::max(sup, value);
    inf = std::min(inf, value);
  }
  if (inf < -1e-12) {
    throw DomainError("CircleSymbolModel: symbol must be nonnegative");
  }
  symbol_sup_ = sup;
}

CircleSymbolModel CircleSymbolModel::constant_one(double r, double alpha) {
  return CircleSymbolModel(r, alpha, FourierSymbol({Complex(1.0, 0.0)}), true);
}

CircleSymbolModel CircleSymbolModel::fourier(double r, double alpha,
                                             std::vector<Complex> nonnegative_coeffs) {
  return CircleSymbolModel(r, alpha, FourierSymbol(std::move(nonnegative_coeffs)), false);
}

double CircleSymbolModel::norm_bound() const {
  const double s = 1.0 - r_ * r_;
  return symbol_sup_ / (s * s);
}

double CircleSymbolModel::arc_density() const { return kTwoPi * r_ / (1.0 - r_ * r_); }

CircleSymbolModel CircleSymbolModel::with_alpha(double alpha) const {
  return CircleSymbolModel(r_, alpha, symbol_, constant_one_);
}

int default_cutoff(double r, double alpha) {
  const double r2 = r * r;
  const double m_star = std::floor((alpha + 1.0) * r2 / (1.0 - r2));
  const double width = std::sqrt(alpha + 1.0) * r / (1.0 - r2) + 50.0;
  return static_cast<int>(m_star + std::ceil(12.0 * width));
}

std::vector<double> explicit_log_eigenvalues(double r, double alpha, int M,
                                             Normalization convention) {
  if (!(alpha > 0.0)) throw DomainError("explicit_eigenvalues: alpha must be > 0");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("explicit_eigenvalues: r must lie in (0,1)");
  if (M < 0) throw DomainError("explicit_eigenvalues: cutoff must be >= 0");
  const double a = effective_alpha(alpha, convention);
  const double log_r = std::log(r);
  // m = 0: Gamma(alpha+2)/Gamma(alpha+1) = alpha + 1.
  const double log_lambda0 = 0.5 * std::log(kTwoPi / a) +
                             (alpha - 1.0) * std::log1p(-r * r) +
                             std::log(alpha + 1.0) + log_r;
  std::vector<double> out(static_cast<std::size_t>(M) + 1);
  CompensatedSum acc;
  acc.add(log_lambda0);
  out[0] = acc.value();
  for (int m = 1; m <= M; ++m) {
    acc.add(2.0 * log_r);
    acc.add(std::log1p((alpha + 1.0) / m));
    out[static_cast<std::size_t>(m)] = acc.value();
  }
  return out;
}

int argmax_index(const std::vector<double>& log_values) {
  if (log_values.empty()) throw DomainError("argmax_index: empty sequence");
  const double top = *std::max_element(log_values.begin(), log_values.end());
  int best = 0;
  for (std::size_t i = 0; i < log_values.size(); ++i) {
    if (log_values[i] >= top - 1e-12) best = static_cast<int>(i);
  }
  return best;
}

SpectrumTruncation explicit_eigenvalues(const CircleSymbolModel& model, int M,
                                        Normalization convention) {
  if (!model.is_constant_one()) {
    throw UnsupportedError("explicit_eigenvalues: closed form exists only for a = 1");
  }
  const double r = model.r();
  const double alpha = model.alpha();
  const bool extend = M < 0;
  if (extend) M = default_cutoff(r, alpha);
  std::vector<double> logs = explicit_log_eigenvalues(r, alpha, M, convention);
  if (extend) {
    const double r2 = r * r;
    while (true) {
      const double top = *std::max_element(logs.begin(), logs.end());
      if (logs.back() < top + std::log(1e-14) && M > (alpha + 1.0) * r2 / (1.0 - r2) + 1.0) {
        break;
      }
      M += std::max(16, M / 4);
      logs = explicit_log_eigenvalues(r, alpha, M, convention);
    }
  }

  SpectrumTruncation out;
  out.cutoff = M;
  out.alpha = alpha;
  out.normalized = true;
  out.normalization = convention;
  out.eigenvalues.reserve(logs.size());
  for (double x : logs) out.eigenvalues.push_back(std::exp(x));

  // lambda_{M+k} <= lambda_M q^k with q the (decreasing) ratio at M+1.
  const double r2 = r * r;
  const double q = r2 * (alpha + 1.0 + (M + 1.0)) / (M + 1.0);
  out.tail_estimate = q < 1.0 ? std::exp(logs.back()) * q / (1.0 - q)
                              : std::numeric_limits<double>::infinity();
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  return out;
}

Eigen::MatrixXcd matrix_elements(const CircleSymbolModel& model, int M) {
  if (M < 0) throw DomainError("matrix_elements: cutoff must be >= 0");
  const double r = model.r();
  const double alpha = model.alpha();
  const WeightedModel weighted = WeightedModel::make(1, alpha);
  const double log_prefactor = std::log(weighted.c_alpha) +
                               alpha * std::log1p(-r * r) +
                               std::log(model.arc_density());
  const double log_r = std::log(r);

  // log(delta_m^2 r^{2m}) for every basis index.
  std::vector<double> log_weight(static_cast<std::size_t>(M) + 1);
  CompensatedSum acc;
  log_weight[0] = 0.0;
  for (int m = 1; m <= M; ++m) {
    acc.add(std::log1p((alpha + 1.0) / m));
    acc.add(2.0 * log_r);
    log_weight[static_cast<std::size_t>(m)] = acc.value();
  }

  const int band = model.symbol().degree();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(M + 1, M + 1);
  for (int j = 0; j <= M; ++j) {
    const int k_lo = std::max(0, j - band);
    const int k_hi = std::min(M, j + band);
    for (int k = k_lo; k <= k_hi; ++k) {
      const Complex coeff = model.fourier_coefficient(j - k);
      if (coeff == Complex(0.0, 0.0)) continue;
      const double magnitude = std::exp(
          log_prefactor + 0.5 * (log_weight[static_cast<std::size_t>(j)] +
                                 log_weight[static_cast<std::size_t>(k)]));
      a(j, k) = magnitude * coeff;
    }
  }
  return a;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw ContractError("hermitian_eigenvalues: matrix not square");
  if (a.size() == 0) return {};
  const double scale = a.norm();
  const double asym = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (asym >= 1e-12 * scale && asym > 0.0) {
    throw ContractError("hermitian_eigenvalues: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw AccuracyError("hermitian_eigenvalues: eigensolver did not converge");
  }
  std::vector<double> values(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

SpectrumTruncation toeplitz_spectrum(const CircleSymbolModel& model, int M,
                                     Normalization convention) {
  if (M < 0) M = default_cutoff(model.r(), model.alpha());
  const double scale = normalization_factor(1, 1, 1, model.alpha(), convention);
  const Eigen::MatrixXcd a = matrix_elements(model, M) * scale;

  SpectrumTruncation out;
  out.eigenvalues = hermitian_eigenvalues(a);
  out.cutoff = M;
  out.alpha = model.alpha();
  out.normalized = true;
  out.normalization = convention;
  // Geometric bound from the last diagonal entry, with ratio at M+1 for a = 1
  // scaled by the symbol's sup.
  const double r2 = model.r() * model.r();
  const double q = r2 * (model.alpha() + 1.0 + (M + 1.0)) / (M + 1.0);
  const double last = a(M, M).real() * model.symbol_sup() /
                      std::max(model.fourier_coefficient(0).real(), 1e-300);
  out.tail_estimate = q < 1.0 ? std::abs(last) * q / (1.0 - q)
                              : std::numeric_limits<double>::infinity();
  return out;
}

Complex phase_value(const std::vector<BallPoint>& points) {
  const std::size_t m = points.size();
  if (m < 1) throw DomainError("phase_value: need at least one point");
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < m; ++j) {
    const BallPoint& a = points[j];
    const BallPoint& b = points[(j + 1) % m];
    sum += std::log(1.0 - inner(a, b)) - std::log1p(-a.norm_sq());
  }
  return Complex(0.0, 1.0) * sum;
}

double label_product(const std::vector<double>& d_values) {
  const std::size_t m = d_values.size();
  if (m < 2) throw DomainError("label_product: need m >= 2 values");
  double prod = 1.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double a = d_values[j];
    const double b = d_values[(j + 1) % m];
    if (!(a > 0.0 && a < 1.0)) throw DomainError("label_product: values must lie in (0,1)");
    prod *= (1.0 - a * b) / (1.0 - a * a);
  }
  return prod;
}

double composition_trace_fixed(const CircleSymbolModel& model, int m, int nodes, int shift) {
  if (m != 2 && m != 3) throw DomainError("composition_trace: m must be 2 or 3");
  if (nodes < 1) throw DomainError("composition_trace: nodes must be positive");
  const double r = model.r();
  const double alpha = model.alpha();
  const double r2 = r * r;
  const double log_one_minus_r2 = std::log1p(-r2);
  const std::size_t n = static_cast<std::size_t>(nodes);

  // The pair factor depends on theta_j - theta_{j+1} only; tabulate it on the
  // grid of index differences.
  // ((1-r^2)/(1-<xi,eta>))^alpha / (1-<xi,eta>)^2 with <xi,eta> = r^2 e^{2 pi i delta}.
  std::vector<Complex> pair(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex w = 1.0 - r2 * std::polar(1.0, kTwoPi * static_cast<double>(k) / nodes);
    const Complex log_w = std::log(w);
    pair[k] = std::exp(alpha * (log_one_minus_r2 - log_w) - 2.0 * log_w);
  }
  std::vector<double> symbol(n);
  for (std::size_t k = 0; k < n; ++k) {
    symbol[k] = model.symbol_at(static_cast<double>(k) / nodes);
  }
  auto diff = [n](std::size_t a, std::size_t b) { return (a + n - b) % n; };

  // Row partial sums over the first (rotated) variable, reduced in index order.
  std::vector<Complex> rows(n);
  const int s = ((shift % m) + m) % m;
  parallel_for(n, [&](std::size_t i0) {
    Complex row{0.0, 0.0};
    if (m == 2) {
      for (std::size_t i1 = 0; i1 < n; ++i1) {
        std::size_t k[2] = {i0, i1};
        const std::size_t a = k[s % 2];
        const std::size_t b = k[(s + 1) % 2];
        row += symbol[a] * symbol[b] * pair[diff(a, b)] * pair[diff(b, a)];
      }
    } else {
      for (std::size_t i1 = 0; i1 < n; ++i1) {
        for (std::size_t i2 = 0; i2 < n; ++i2) {
          std::size_t k[3] = {i0, i1, i2};
          const std::size_t a = k[s % 3];
          const std::size_t b = k[(s + 1) % 3];
          const std::size_t c = k[(s + 2) % 3];
          row += symbol[a] * symbol[b] * symbol[c] * pair[diff(a, b)] *
                 pair[diff(b, c)] * pair[diff(c, a)];
        }
      }
    }
    rows[i0] = row;
  });
  Complex total{0.0, 0.0};
  for (const Complex& row : rows) total += row;

  const WeightedModel weighted = WeightedModel::make(1, alpha);
  const double log_scale =
      m * (std::log(weighted.c_alpha) + std::log(model.arc_density())) -
      m * std::log(static_cast<double>(nodes));
  return total.real() * std::exp(log_scale);
}

TraceQuadrature composition_trace_quadrature(const CircleSymbolModel& model, int m,
                                             int max_nodes) {
  TraceQuadrature out;
  int nodes = 16;
  double previous = composition_trace_fixed(model, m, nodes);
  while (nodes < max_nodes) {
    nodes *= 2;
    const double current = composition_trace_fixed(model, m, nodes);
    out.value = current;
    out.nodes_per_axis = nodes;
    out.relative_change = std::abs(current - previous) / std::abs(current);
    previous = current;
    if (out.relative_change < 1e-7) {
      out.resolved = true;
      return out;
    }
  }
  out.value = previous;
  out.nodes_per_axis = nodes;
  return out;
}

}  // namespace szegolab
