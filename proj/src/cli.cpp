#include "szegolab/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "szegolab/errors.hpp"
#include "szegolab/geometry.hpp"
#include "szegolab/hessian_determinant.hpp"
#include "szegolab/szego.hpp"
#include "szegolab/toeplitz.hpp"

namespace szegolab::cli {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<std::string> kParamNames = {"r", "alpha", "t1", "t2", "p", "phi",
                                              "chart", "m", "d", "seed"};

std::string csv_number(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17) << x;
  return os.str();
}

std::string md_number(double x, int decimals = 4) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(decimals) << x;
  return os.str();
}

std::string format_number(Format format, double x, int decimals = 4) {
  return format == Format::csv ? csv_number(x) : md_number(x, decimals);
}

double to_double(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  double value = 0.0;
  in >> value;
  if (in.fail() || !(in >> std::ws).eof() || !std::isfinite(value)) {
    throw DomainError("--" + key + ": '" + text + "' is not a finite number");
  }
  return value;
}

long long to_integer(const std::string& key, const std::string& text) {
  const double value = to_double(key, text);
  if (value != std::floor(value) || std::abs(value) > 9.0e15) {
    throw DomainError("--" + key + ": '" + text + "' is not an integer");
  }
  return static_cast<long long>(value);
}

std::vector<double> to_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(to_double(key, item));
  }
  if (out.empty()) throw DomainError("--" + key + ": empty list");
  return out;
}

// Typed view on the raw parameter map; each getter enforces its range.
class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& raw) : raw_(raw) {}

  bool has(const std::string& key) const { return raw_.count(key) != 0; }

  double r(double fallback) const {
    const double r = has("r") ? to_double("r", raw_.at("r")) : fallback;
    if (!(r > 0.0 && r < 1.0)) throw DomainError("--r must lie in (0, 1)");
    return r;
  }

  std::vector<double> alphas(std::vector<double> fallback) const {
    std::vector<double> out = has("alpha") ? to_list("alpha", raw_.at("alpha")) : fallback;
    for (double a : out) {
      if (!(a > 0.0)) throw DomainError("--alpha values must be positive");
    }
    return out;
  }

  double positive(const std::string& key, double fallback) const {
    const double v = has(key) ? to_double(key, raw_.at(key)) : fallback;
    if (!(v > 0.0)) throw DomainError("--" + key + " must be positive");
    return v;
  }

  int integer(const std::string& key, int fallback, int lo, int hi) const {
    const long long v = has(key) ? to_integer(key, raw_.at(key)) : fallback;
    if (v < lo || v > hi) {
      throw DomainError("--" + key + " must lie in [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    }
    return static_cast<int>(v);
  }

  std::uint64_t seed(std::uint64_t fallback) const {
    if (!has("seed")) return fallback;
    const long long v = to_integer("seed", raw_.at("seed"));
    if (v < 0) throw DomainError("--seed must be nonnegative");
    return static_cast<std::uint64_t>(v);
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    return has(key) ? raw_.at(key) : fallback;
  }

 private:
  const std::map<std::string, std::string>& raw_;
};

void require_only(const RunConfig& config, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : config.params) {
    if (!allowed.count(key)) {
      throw DomainError("--" + key + " is not accepted by '" + command_name(config.command) + "'");
    }
  }
}

struct TableSpec {
  double r;
  double t1;
  double t2;
  std::vector<double> alphas;
  std::vector<int> counts;
  std::vector<double> estimates;
  std::vector<double> scaled;
  std::vector<double> scaled_tol;
};

// Reference values. The count estimates are printed truncated to two
// decimals, so a cell matches when it is within one unit of the last digit.
TableSpec table_spec(Command command) {
  const std::vector<double> alphas = {100, 500, 1e3, 5e3, 1e4, 5e4, 1e5};
  if (command == Command::table1) {
    return {0.5, 16.0 / 15.0, 16.0 / 9.0, alphas,
            {14, 30, 42, 95, 134, 301, 426},
            {13.47, 30.13, 42.61, 95.29, 134.76, 301.35, 426.17},
            {2.4814, 2.378, 2.3541, 2.3813, 2.3750, 2.3859, 2.3877},
            {1e-4, 1e-3, 1e-4, 1e-4, 1e-4, 1e-4, 1e-4}};
  }
  return {1.0 / std::sqrt(2.0), 0.4, 0.6, alphas,
          {5, 12, 18, 39, 56, 125, 177},
          {5.60, 12.52, 17.71, 39.61, 56.02, 125.28, 177.17},
          {0.8862, 0.9511, 1.0088, 0.9775, 0.9925, 0.9908, 0.9920},
          std::vector<double>(7, 1e-4)};
}

int run_table(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_only(config, {});
  const TableSpec spec = table_spec(config.command);
  const auto model = CircleSymbolModel::constant_one(spec.r, spec.alphas.front());
  const auto rows = convergence_scan(model, Interval{spec.t1, spec.t2}, spec.alphas,
                                     Normalization::alpha_plus_one);
  const double limit = rows.front().rhs_limit;

  int mismatches = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const std::string at = "alpha=" + csv_number(row.alpha) + ": ";
    if (*row.count_N != spec.counts[i]) {
      err << at << "count " << *row.count_N << " != " << spec.counts[i] << "\n";
      ++mismatches;
    }
    if (std::abs(*row.rhs_asymptotic_count - spec.estimates[i]) > 0.01 + 1e-9) {
      err << at << "estimate " << csv_number(*row.rhs_asymptotic_count)
          << " != " << spec.estimates[i] << "\n";
      ++mismatches;
    }
    if (std::abs(row.lhs_scaled - spec.scaled[i]) > spec.scaled_tol[i] + 1e-12) {
      err << at << "scaled count " << csv_number(row.lhs_scaled) << " != " << spec.scaled[i]
          << "\n";
      ++mismatches;
    }
  }

  if (config.format == Format::csv) {
    out << "alpha,count,count_estimate,scaled_count,limit\n";
    for (const auto& row : rows) {
      out << csv_number(row.alpha) << ',' << *row.count_N << ','
          << csv_number(*row.rhs_asymptotic_count) << ',' << csv_number(row.lhs_scaled) << ','
          << csv_number(row.rhs_limit) << '\n';
    }
  } else {
    out << "r = " << md_number(spec.r) << ", I = [" << md_number(spec.t1) << ", "
        << md_number(spec.t2) << "], limit = " << md_number(limit) << "\n\n";
    out << "| alpha | N | sqrt(alpha/pi) * limit | sqrt(pi/alpha) * N |\n";
    out << "|---|---|---|---|\n";
    for (const auto& row : rows) {
      out << "| " << row.alpha << " | " << *row.count_N << " | "
          << md_number(*row.rhs_asymptotic_count, 2) << " | " << md_number(row.lhs_scaled)
          << " |\n";
    }
    out << "\ngolden: " << (mismatches == 0 ? "ok" : "MISMATCH") << "\n";
  }
  return mismatches == 0 ? kOk : kGoldenMismatch;
}

int run_schatten_scan(const RunConfig& config, const CircleSymbolModel& model, double p,
                      const std::vector<double>& alphas, std::ostream& out) {
  const double limit = schatten_limit(model, p);
  std::vector<double> norms(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    norms[i] = scaled_schatten_norm(model_spectrum(model.with_alpha(alphas[i])), p);
  }
  const bool csv = config.format == Format::csv;
  out << (csv ? "alpha,scaled_schatten_norm,limit,relative_error\n"
              : "| alpha | scaled Schatten norm | limit | rel. error |\n|---|---|---|---|\n");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const double rel = norms[i] / limit - 1.0;
    if (csv) {
      out << csv_number(alphas[i]) << ',' << csv_number(norms[i]) << ',' << csv_number(limit)
          << ',' << csv_number(rel) << '\n';
    } else {
      out << "| " << md_number(alphas[i], 0) << " | " << md_number(norms[i]) << " | "
          << md_number(limit) << " | " << md_number(rel, 5) << " |\n";
    }
  }
  return kOk;
}

int run_scan(const RunConfig& config, std::ostream& out) {
  require_only(config, {"r", "alpha", "t1", "t2", "phi", "p"});
  const Params params(config.params);
  const double r = params.r(0.5);
  const std::vector<double> alphas = params.alphas({1e3, 1e4, 1e5});
  const auto model = CircleSymbolModel::constant_one(r, alphas.front());
  const bool counting = params.has("t1") || params.has("t2");
  const int modes = int(counting) + int(params.has("phi")) + int(params.has("p"));
  if (modes > 1) throw DomainError("choose one of --phi, --p or --t1/--t2");
  if (params.has("p")) return run_schatten_scan(config, model, params.positive("p", 1.0), alphas, out);

  std::vector<ScanRow> rows;
  if (counting) {
    if (!params.has("t1") || !params.has("t2")) throw DomainError("--t1 and --t2 go together");
    const double t1 = params.positive("t1", 1.0);
    const double t2 = params.positive("t2", 1.0);
    count_prediction(r, t1, t2);
    rows = convergence_scan(model, Interval{t1, t2}, alphas);
  } else {
    rows = convergence_scan(model, Phi::parse(params.text("phi", "pow:1")), alphas);
  }

  const bool csv = config.format == Format::csv;
  if (csv) {
    out << "alpha,lhs_scaled,rhs_limit,relative_error" << (counting ? ",count,count_estimate" : "")
        << '\n';
  } else {
    out << "| alpha | scaled lhs | limit | rel. error |" << (counting ? " N | estimate |" : "")
        << '\n';
    out << "|---|---|---|---|" << (counting ? "---|---|" : "") << '\n';
  }
  for (const auto& row : rows) {
    const double rel = row.lhs_scaled / row.rhs_limit - 1.0;
    const std::string sep = csv ? "," : " | ";
    out << (csv ? "" : "| ") << format_number(config.format, row.alpha, 0) << sep
        << format_number(config.format, row.lhs_scaled) << sep
        << format_number(config.format, row.rhs_limit) << sep
        << (csv ? csv_number(rel) : md_number(rel, 5));
    if (counting) {
      out << sep << *row.count_N << sep
          << format_number(config.format, *row.rhs_asymptotic_count, 2);
    }
    out << (csv ? "" : " |") << '\n';
  }
  return kOk;
}

int run_classify(const RunConfig& config, std::ostream& out) {
  require_only(config, {"chart", "r"});
  const Params params(config.params);
  const std::string name = params.text("chart", "circle");
  const double r = params.r(0.5);
  const ChartedSubmanifold chart = charts::by_name(name, r);
  const SymplecticClass cls = classify_chart(chart, charts::sample_points(chart.d));

  std::string tag = to_string(cls.tag);
  if (cls.tag == SymplecticTag::lagrangian) tag = "isotropic (lagrangian)";
  if (config.format == Format::csv) {
    out << "chart,class,lambda_spectrum\n" << name << ',' << tag << ",\"";
    for (std::size_t i = 0; i < cls.lambda_spectrum.size(); ++i) {
      out << (i ? ";" : "") << csv_number(cls.lambda_spectrum[i]);
    }
    out << "\"\n";
  } else {
    out << tag << ", λ-spectrum: [";
    for (std::size_t i = 0; i < cls.lambda_spectrum.size(); ++i) {
      out << (i ? ", " : "") << md_number(cls.lambda_spectrum[i]);
    }
    out << "]\n";
  }
  return kOk;
}

int run_hessdet(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_only(config, {"d", "m", "seed"});
  const Params params(config.params);
  const int d = params.integer("d", 2, 1, 16);
  const int m = params.integer("m", 4, 2, 64);
  const std::uint64_t seed = params.seed(7);
  const HessdetReport report = evaluate_determinants(random_metric_pair(d, seed), m);

  if (config.format == Format::csv) {
    out << "method,real,imag\n";
    out << "direct," << csv_number(report.direct.real()) << ',' << csv_number(report.direct.imag())
        << '\n';
    out << "polynomial," << csv_number(report.polynomial.real()) << ','
        << csv_number(report.polynomial.imag()) << '\n';
    out << "eigen_product," << csv_number(report.eigen_product) << ",0\n";
    out << "max_relative_spread," << csv_number(report.max_relative_spread) << ",0\n";
  } else {
    auto cplx = [](std::complex<double> z) {
      std::ostringstream os;
      os.imbue(std::locale::classic());
      os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ")
         << std::abs(z.imag()) << "i";
      return os.str();
    };
    std::ostringstream spread;
    spread.imbue(std::locale::classic());
    spread << std::scientific << std::setprecision(3) << report.max_relative_spread;
    out << "d = " << d << ", m = " << m << ", seed = " << seed << "\n\n";
    out << "| method | det O_{m-1} |\n|---|---|\n";
    out << "| block matrix (LU) | " << cplx(report.direct) << " |\n";
    out << "| polynomial P_{m-1}(W) | " << cplx(report.polynomial) << " |\n";
    out << "| lambda product | " << cplx(report.eigen_product) << " |\n";
    out << "\nmax relative spread: " << spread.str() << "\n";
  }
  if (!(report.max_relative_spread < 1e-9)) {
    err << "determinant evaluations disagree: spread " << report.max_relative_spread << "\n";
    return kAccuracy;
  }
  return kOk;
}

int run_qcheck(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_only(config, {"phi"});
  const Params params(config.params);
  const Phi phi = Phi::parse(params.text("phi", "pow:1"));
  const bool csv = config.format == Format::csv;
  out << (csv ? "epsilon,t,quadrature,monomial_rule,relative_error\n"
              : "| eps | t | quadrature | monomial rule | rel. error |\n|---|---|---|---|---|\n");
  double worst = 0.0;
  for (double eps : {0.0, 0.5, 1.0, 1.5}) {
    for (double t : {0.1, 1.0, 7.0}) {
      const double numeric = q_transform(QTransformSpec{eps, phi}, t);
      const double exact = q_transform_monomial_rule(phi, eps, t);
      const double rel = std::abs(numeric - exact) / std::abs(exact);
      worst = std::max(worst, rel);
      if (csv) {
        out << csv_number(eps) << ',' << csv_number(t) << ',' << csv_number(numeric) << ','
            << csv_number(exact) << ',' << csv_number(rel) << '\n';
      } else {
        std::ostringstream e;
        e.imbue(std::locale::classic());
        e << std::scientific << std::setprecision(2) << rel;
        out << "| " << md_number(eps, 1) << " | " << md_number(t, 1) << " | "
            << std::setprecision(10) << numeric << " | " << exact << " | " << e.str() << " |\n";
      }
    }
  }
  if (!(worst < 1e-8)) {
    err << "Q transform misses the monomial rule: worst relative error " << worst << "\n";
    return kAccuracy;
  }
  return kOk;
}

int run_trace_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_only(config, {"r", "alpha", "m"});
  const Params params(config.params);
  const double r = params.r(0.5);
  const std::vector<double> alphas = params.alphas({50.0});
  if (alphas.size() != 1) throw DomainError("trace-compare takes a single --alpha");
  const double alpha = alphas.front();
  const int m = params.integer("m", 2, 2, 3);

  const auto model = CircleSymbolModel::constant_one(r, alpha);
  const TraceQuadrature quad = composition_trace_quadrature(model, m);
  const SpectrumTruncation spectrum = explicit_eigenvalues(model);
  const double scale = normalization_factor(1, 1, 1, alpha);
  double sum = 0.0;
  for (auto it = spectrum.eigenvalues.rbegin(); it != spectrum.eigenvalues.rend(); ++it) {
    sum += std::pow(*it / scale, m);
  }
  const double rel = std::abs(quad.value - sum) / std::abs(sum);

  if (config.format == Format::csv) {
    out << "alpha,m,quadrature,eigen_sum,relative_error,nodes_per_axis\n"
        << csv_number(alpha) << ',' << m << ',' << csv_number(quad.value) << ','
        << csv_number(sum) << ',' << csv_number(rel) << ',' << quad.nodes_per_axis << '\n';
  } else {
    std::ostringstream e;
    e.imbue(std::locale::classic());
    e << std::scientific << std::setprecision(3) << rel;
    out << "| alpha | m | quadrature | sum lambda^m | rel. error | nodes/axis |\n"
        << "|---|---|---|---|---|---|\n"
        << "| " << alpha << " | " << m << " | " << std::setprecision(12) << quad.value << " | "
        << sum << " | " << e.str() << " | " << quad.nodes_per_axis << " |\n";
  }
  if (!quad.resolved) {
    err << "composition trace quadrature unresolved at " << quad.nodes_per_axis
        << " nodes per axis (relative change " << quad.relative_change << ")\n";
    return kAccuracy;
  }
  return kOk;
}

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "table1") return Command::table1;
  if (name == "table2") return Command::table2;
  if (name == "scan") return Command::scan;
  if (name == "classify") return Command::classify;
  if (name == "hessdet") return Command::hessdet;
  if (name == "qcheck") return Command::qcheck;
  if (name == "trace-compare") return Command::trace_compare;
  throw DomainError("unknown command '" + name + "'");
}

std::string command_name(Command command) {
  switch (command) {
    case Command::table1: return "table1";
    case Command::table2: return "table2";
    case Command::scan: return "scan";
    case Command::classify: return "classify";
    case Command::hessdet: return "hessdet";
    case Command::qcheck: return "qcheck";
    case Command::trace_compare: return "trace-compare";
  }
  return "?";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::table1:
      case Command::table2: return run_table(config, out, err);
      case Command::scan: return run_scan(config, out);
      case Command::classify: return run_classify(config, out);
      case Command::hessdet: return run_hessdet(config, out, err);
      case Command::qcheck: return run_qcheck(config, out, err);
      case Command::trace_compare: return run_trace_compare(config, out, err);
    }
  } catch (const AccuracyError& e) {
    err << "accuracy error: " << e.what() << "\n";
    return kAccuracy;
  } catch (const std::logic_error& e) {
    // DomainError, ContractError and UnsupportedError all derive from logic_error.
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const RankError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kValidation;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toeplitz spectra on weighted Bergman spaces", "szegolab"};
  app.set_config("--config", "", "flat key=value file; command line flags take precedence");
  app.allow_config_extras(false);

  std::string command;
  app.add_option("command", command,
                 "table1 | table2 | scan | classify | hessdet | qcheck | trace-compare")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "scan", "classify", "hessdet", "qcheck",
                             "trace-compare"}));

  std::map<std::string, std::string> values;
  const std::map<std::string, std::string> help = {
      {"r", "circle radius in (0,1)"},
      {"alpha", "comma separated weights"},
      {"t1", "interval left end"},
      {"t2", "interval right end"},
      {"p", "Schatten exponent"},
      {"phi", "pow:<p> or poly:<c1,c2,...>"},
      {"chart", "circle | sphere3 | open-ball | generic2d"},
      {"m", "power / block count"},
      {"d", "real dimension"},
      {"seed", "random seed"}};
  for (const auto& name : kParamNames) {
    app.add_option("--" + name, values[name], help.at(name));
  }
  std::string format = "md";
  app.add_option("--format", format, "md | csv")->check(CLI::IsMember({"md", "csv"}));
  std::string output;
  app.add_option("--out", output, "write the report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kValidation;
  }

  RunConfig config;
  config.command = parse_command(command);
  config.format = format == "csv" ? Format::csv : Format::markdown;
  for (const auto& name : kParamNames) {
    if (app.count("--" + name) > 0 || !values[name].empty()) config.params[name] = values[name];
  }

  if (output.empty()) return run(config, out, err);
  config.output = output;
  std::ofstream file(output, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << output << "\n";
    return kValidation;
  }
  return run(config, file, err);
}

}  // namespace szegolab::cli
