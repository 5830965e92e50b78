#include "szegolab/szego.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "szegolab/errors.hpp"
#include "szegolab/parallel.hpp"
#include "szegolab/quadrature.hpp"
#include "szegolab/special_functions.hpp"

namespace szegolab {

namespace {

constexpr double kPi = std::numbers::pi;

// Smallest s below which phi(s) is taken as phi(0) = 0.
constexpr double kUnderflowGuard = 1e-300;

double parse_double(const std::string& text, const std::string& what) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  double value = 0.0;
  in >> value;
  if (in.fail() || !in.eof()) throw DomainError("invalid number '" + text + "' in " + what);
  return value;
}

// Tolerant floor: values within 1e-12 (relative) below an integer count as it.
long long robust_floor(double v) {
  const double up = std::ceil(v);
  if (up - v < 1e-12 * std::max(1.0, std::abs(v))) return static_cast<long long>(up);
  return static_cast<long long>(std::floor(v));
}

// ln(1/((1-r^2)^2 t)), clamped at 0 when t sits at the norm bound up to rounding.
double log_gap(double r, double t) {
  const double s = 1.0 - r * r;
  const double value = -std::log(s * s * t);
  return value < 0.0 && value > -1e-12 ? 0.0 : value;
}

}  // namespace

Phi Phi::power(double p) {
  if (!(p > 0.0)) throw DomainError("Phi::power: exponent must be positive");
  Phi phi;
  phi.f = [p](double s) { return s > 0.0 ? std::pow(s, p) : 0.0; };
  phi.p = p;
  phi.exponent = p;
  std::ostringstream label;
  label.imbue(std::locale::classic());
  label << "pow:" << p;
  phi.label = label.str();
  return phi;
}

Phi Phi::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) throw DomainError("Phi::polynomial: no coefficients");
  Phi phi;
  int lowest = 0;
  while (lowest < static_cast<int>(coeffs.size()) && coeffs[static_cast<std::size_t>(lowest)] == 0.0) {
    ++lowest;
  }
  if (lowest == static_cast<int>(coeffs.size())) {
    throw DomainError("Phi::polynomial: all coefficients are zero");
  }
  phi.p = lowest + 1.0;
  phi.poly_coeffs = coeffs;
  phi.f = [coeffs](double s) {
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = (acc + coeffs[k]) * s;
    return acc;
  };
  std::ostringstream label;
  label.imbue(std::locale::classic());
  label << "poly:";
  for (std::size_t k = 0; k < coeffs.size(); ++k) label << (k ? "," : "") << coeffs[k];
  phi.label = label.str();
  return phi;
}

Phi Phi::callable(std::function<double(double)> f, double p, std::string label) {
  if (!(p > 0.0)) throw DomainError("Phi::callable: declared exponent must be positive");
  Phi phi;
  phi.f = std::move(f);
  phi.p = p;
  phi.label = std::move(label);
  return phi;
}

Phi Phi::parse(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw DomainError("phi spec must be pow:<p> or poly:<c1,...>");
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  if (kind == "pow") return power(parse_double(body, "phi"));
  if (kind == "poly") {
    std::vector<double> coeffs;
    std::stringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) coeffs.push_back(parse_double(item, "phi"));
    return polynomial(coeffs);
  }
  throw DomainError("unknown phi kind '" + kind + "'");
}

double q_transform(const QTransformSpec& spec, double t) {
  if (!(spec.epsilon >= 0.0)) throw DomainError("q_transform: epsilon must be >= 0");
  if (!(t > 0.0)) throw DomainError("q_transform: t must be positive");
  if (spec.epsilon == 0.0) return spec.phi(t);
  const double eps = spec.epsilon;
  auto integrand = [&](double u) {
    const double s = t * std::exp(-u);
    if (s < kUnderflowGuard) return 0.0;
    return spec.phi(s) * std::pow(u, eps - 1.0);
  };
  const quad::Result result = quad::exp_sinh(integrand, spec.rel_tol, 12);
  if (!result.converged &&
      result.error_estimate > 1e-8 * std::max(std::abs(result.value), 1e-300)) {
    std::ostringstream msg;
    msg << "q_transform: quadrature did not converge (eps=" << eps << ", t=" << t
        << ", estimate=" << result.value << ", change=" << result.error_estimate << ")";
    throw AccuracyError(msg.str());
  }
  return result.value / std::exp(log_gamma(eps));
}

double q_transform_monomial_rule(const Phi& phi, double epsilon, double t) {
  if (!(epsilon >= 0.0)) throw DomainError("q_transform: epsilon must be >= 0");
  if (phi.exponent) {
    return std::pow(t, *phi.exponent) / std::pow(*phi.exponent, epsilon);
  }
  if (phi.poly_coeffs.empty()) {
    throw UnsupportedError("q_transform_monomial_rule: phi is neither a power nor a polynomial");
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < phi.poly_coeffs.size(); ++k) {
    const double p = static_cast<double>(k + 1);
    acc += phi.poly_coeffs[k] * std::pow(t, p) / std::pow(p, epsilon);
  }
  return acc;
}

double szego_rhs(const CircleSymbolModel& model, const Phi& phi) {
  const double r = model.r();
  const double s = 1.0 - r * r;
  const double inv = 1.0 / (s * s);
  const double front = model.arc_density() / std::sqrt(2.0);
  auto q = [&](double t) {
    if (t <= 0.0) return 0.0;
    return q_transform(QTransformSpec{0.5, phi}, t);
  };
  if (model.is_constant_one()) return front * q(inv);

  // Smooth periodic integrand in theta: trapezoid with doubling.
  int nodes = 64;
  double previous = quad::periodic_trapezoid([&](double th) { return q(model.symbol_at(th) * inv); }, nodes);
  for (int level = 0; level < 8; ++level) {
    nodes *= 2;
    const double current =
        quad::periodic_trapezoid([&](double th) { return q(model.symbol_at(th) * inv); }, nodes);
    if (std::abs(current - previous) <= 1e-10 * std::abs(current)) return front * current;
    previous = current;
  }
  return front * previous;
}

double szego_rhs_curve(const ChartedSubmanifold& curve,
                       const std::function<double(double)>& symbol, const Phi& phi) {
  if (curve.d != 1) {
    throw UnsupportedError("szego_rhs_curve: only curves (d = 1) are supported");
  }
  const int n = curve.n;
  auto integrand = [&](double t) {
    Eigen::VectorXd tv(1);
    tv(0) = t;
    const double a = symbol(t);
    if (a <= 0.0) return 0.0;
    const BallPoint p = curve.point(tv);
    const MetricPair pair = pullback_forms(curve, tv);
    const double density = std::sqrt(pair.G(0, 0));
    const double arg = a / std::pow(1.0 - p.norm_sq(), n + 1);
    return q_transform(QTransformSpec{0.5, phi}, arg) * density;
  };
  const quad::GaussRule rule = quad::gauss_legendre(16);
  int panels = 8;
  double previous = quad::gauss_composite(integrand, 0.0, 1.0, panels, rule);
  for (int level = 0; level < 8; ++level) {
    panels *= 2;
    const double current = quad::gauss_composite(integrand, 0.0, 1.0, panels, rule);
    if (std::abs(current - previous) <= 1e-6 * std::abs(current)) {
      return current / std::sqrt(2.0);
    }
    previous = current;
  }
  throw AccuracyError("szego_rhs_curve: quadrature did not settle under panel doubling");
}

CountPrediction count_prediction(double r, double t1, double t2, std::optional<double> alpha) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("count_prediction: r must lie in (0,1)");
  const double s = 1.0 - r * r;
  const double bound = 1.0 / (s * s);
  if (!(t1 > 0.0) || !(t1 <= t2)) throw DomainError("count_prediction: need 0 < t1 <= t2");
  if (t2 > bound * (1.0 + 1e-12)) {
    throw DomainError("count_prediction: t2 exceeds the norm bound 1/(1-r^2)^2");
  }
  CountPrediction out;
  out.limit = std::sqrt(8.0 * kPi) * r / s *
              (std::sqrt(log_gap(r, t1)) - std::sqrt(log_gap(r, t2)));
  if (alpha) {
    if (!(*alpha > 0.0)) throw DomainError("count_prediction: alpha must be positive");
    out.estimate = out.limit * std::sqrt(*alpha / kPi);
  }
  return out;
}

double eigenvalue_density(double r, double s) {
  const double gap = log_gap(r, s);
  if (!(s > 0.0) || !(gap > 0.0)) throw DomainError("eigenvalue_density: s outside (0, 1/(1-r^2)^2)");
  return 2.0 * kPi * r / (1.0 - r * r) / (std::sqrt(kPi) * s) / std::sqrt(gap);
}

int eigen_count(const SpectrumTruncation& spectrum, double t1, double t2) {
  return static_cast<int>(std::count_if(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(),
                                        [&](double x) { return t1 <= x && x <= t2; }));
}

double schatten_limit(const CircleSymbolModel& model, double p) {
  if (!(p > 0.0)) throw DomainError("schatten_limit: p must be positive");
  const double r = model.r();
  const double s = 1.0 - r * r;
  const double inv = 1.0 / (s * s);
  double mean = 0.0;
  if (model.is_constant_one()) {
    mean = std::pow(inv, p);
  } else {
    auto f = [&](double th) { return std::pow(std::max(0.0, model.symbol_at(th)) * inv, p); };
    int nodes = 1024;
    double previous = quad::periodic_trapezoid(f, nodes);
    for (int level = 0; level < 6; ++level) {
      nodes *= 2;
      mean = quad::periodic_trapezoid(f, nodes);
      if (std::abs(mean - previous) <= 1e-12 * std::abs(mean)) break;
      previous = mean;
    }
  }
  const double integral = mean * model.arc_density() / std::sqrt(2.0 * p);
  return std::pow(integral, 1.0 / p);
}

double scaled_schatten_norm(const SpectrumTruncation& spectrum, double p) {
  if (!(p > 0.0)) throw DomainError("scaled_schatten_norm: p must be positive");
  double sum = 0.0;
  // ascending order keeps the small terms from being absorbed
  for (auto it = spectrum.eigenvalues.rbegin(); it != spectrum.eigenvalues.rend(); ++it) {
    if (*it > 0.0) sum += std::pow(*it, p);
  }
  return std::pow(kPi / spectrum.alpha, 1.0 / (2.0 * p)) * std::pow(sum, 1.0 / p);
}

double scaled_trace(const SpectrumTruncation& spectrum, const Phi& phi) {
  double sum = 0.0;
  for (auto it = spectrum.eigenvalues.rbegin(); it != spectrum.eigenvalues.rend(); ++it) {
    sum += phi(std::max(0.0, *it));
  }
  return std::sqrt(kPi / spectrum.alpha) * sum;
}

SpectrumTruncation model_spectrum(const CircleSymbolModel& model, Normalization convention) {
  if (model.is_constant_one()) return explicit_eigenvalues(model, -1, convention);
  return toeplitz_spectrum(model, -1, convention);
}

std::vector<double> boundedness_scan_small_p(const CircleSymbolModel& model, double p,
                                             const std::vector<double>& alpha_grid) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("boundedness_scan_small_p: need 0 < p < 1");
  std::vector<double> out(alpha_grid.size());
  const Phi phi = Phi::power(p);
  parallel_for(alpha_grid.size(), [&](std::size_t i) {
    out[i] = scaled_trace(model_spectrum(model.with_alpha(alpha_grid[i])), phi);
  });
  return out;
}

std::vector<ScanRow> convergence_scan(const CircleSymbolModel& model, const Phi& phi,
                                      const std::vector<double>& alpha_grid,
                                      Normalization convention) {
  const double rhs = szego_rhs(model, phi);
  std::vector<ScanRow> rows(alpha_grid.size());
  parallel_for(alpha_grid.size(), [&](std::size_t i) {
    const SpectrumTruncation spectrum =
        model_spectrum(model.with_alpha(alpha_grid[i]), convention);
    rows[i].alpha = alpha_grid[i];
    rows[i].lhs_scaled = scaled_trace(spectrum, phi);
    rows[i].rhs_limit = rhs;
  });
  return rows;
}

std::vector<ScanRow> convergence_scan(const CircleSymbolModel& model, Interval interval,
                                      const std::vector<double>& alpha_grid,
                                      Normalization convention) {
  if (!model.is_constant_one()) {
    throw UnsupportedError("convergence_scan: interval counts are implemented for a = 1");
  }
  const double limit = count_prediction(model.r(), interval.t1, interval.t2).limit;
  std::vector<ScanRow> rows(alpha_grid.size());
  parallel_for(alpha_grid.size(), [&](std::size_t i) {
    const double alpha = alpha_grid[i];
    const SpectrumTruncation spectrum = model_spectrum(model.with_alpha(alpha), convention);
    const int count = eigen_count(spectrum, interval.t1, interval.t2);
    rows[i].alpha = alpha;
    rows[i].count_N = count;
    rows[i].lhs_scaled = std::sqrt(kPi / alpha) * count;
    rows[i].rhs_limit = limit;
    rows[i].rhs_asymptotic_count =
        count_prediction(model.r(), interval.t1, interval.t2, alpha).estimate;
  });
  return rows;
}

long long NormAsymptote::m_star(double alpha) const {
  const double r2 = r * r;
  return robust_floor((alpha + 1.0) * r2 / (1.0 - r2));
}

NormAsymptote norm_asymptote(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("norm_asymptote: r must lie in (0,1)");
  const double s = 1.0 - r * r;
  return NormAsymptote{1.0 / (s * s), r};
}

}  // namespace szegolab
