#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <limits>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "spline_gauss/basis.hpp"
#include "spline_gauss/error.hpp"
#include "spline_gauss/io.hpp"
#include "spline_gauss/knots.hpp"
#include "spline_gauss/oracle.hpp"
#include "spline_gauss/peano.hpp"
#include "spline_gauss/rule.hpp"

namespace spline_gauss::cli {

namespace {

using nlohmann::json;

enum class Family { Uniform, Geometric, Chebyshev, Legendre, File };
enum class Format { Json, Csv, Pretty };

// Raised for bad parameters that CLI11 itself cannot catch.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<Family> family;
  std::optional<int> internal;   // --N
  std::optional<int> intervals;  // --n
  std::optional<double> q;
  std::vector<double> domain{0.0, 1.0};
  std::string knots_file;
  Format format = Format::Json;
  std::string output;
  std::uint64_t seed = 1;
  int grid = 1000;
  int trials = 100;
  double perturb = 0.0;
  bool normalize = false;
  std::string q_sweep;
};

void add_knot_source(CLI::App* cmd, RunConfig& cfg) {
  const std::map<std::string, Family> families{
      {"uniform", Family::Uniform},     {"geometric", Family::Geometric},
      {"chebyshev", Family::Chebyshev}, {"legendre", Family::Legendre},
      {"file", Family::File},
  };
  cmd->add_option("--family", cfg.family, "knot family")
      ->transform(CLI::CheckedTransformer(families, CLI::ignore_case));
  cmd->add_option("--N", cfg.internal, "number of internal knots");
  cmd->add_option("--n", cfg.intervals, "number of intervals");
  cmd->add_option("--q", cfg.q, "stretching ratio (geometric only)");
  cmd->add_option("--domain", cfg.domain, "domain ends a b")->expected(2);
  cmd->add_option("--knots-file", cfg.knots_file,
                  "read knots from a file ('-' for stdin)");
}

void add_format(CLI::App* cmd, RunConfig& cfg) {
  const std::map<std::string, Format> formats{
      {"json", Format::Json}, {"csv", Format::Csv}, {"pretty", Format::Pretty}};
  cmd->add_option("--format", cfg.format, "json, csv or pretty")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--output", cfg.output, "output file (default stdout)");
}

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Validation failures on user-supplied knots are domain errors (exit 3);
// everything a generator rejects is a usage error (exit 2).
KnotSequence load_knots(const RunConfig& cfg, std::istream& in) {
  const bool from_file = !cfg.knots_file.empty();
  if (from_file && cfg.family && *cfg.family != Family::File) {
    throw UsageError("give either --family or --knots-file, not both");
  }
  if (!from_file && (!cfg.family || *cfg.family == Family::File)) {
    throw UsageError("no knot source: pass --family or --knots-file");
  }
  if (from_file) {
    if (cfg.internal || cfg.intervals || cfg.q) {
      throw UsageError("--N, --n and --q do not apply to --knots-file");
    }
    std::string text;
    if (cfg.knots_file == "-") {
      text = slurp(in);
    } else {
      std::ifstream file(cfg.knots_file);
      if (!file) throw UsageError("cannot open " + cfg.knots_file);
      text = slurp(file);
    }
    return read_knots(text);
  }

  if (cfg.internal && cfg.intervals) {
    throw UsageError("give either --N or --n, not both");
  }
  if (!cfg.internal && !cfg.intervals) {
    throw UsageError("missing knot count: pass --N or --n");
  }
  const int internal = cfg.internal ? *cfg.internal : *cfg.intervals - 1;
  if (cfg.q && *cfg.family != Family::Geometric) {
    throw UsageError("--q only applies to the geometric family");
  }
  const double a = cfg.domain[0];
  const double b = cfg.domain[1];
  try {
    switch (*cfg.family) {
      case Family::Uniform: return uniform_knots(internal + 1, a, b);
      case Family::Geometric:
        if (!cfg.q) throw UsageError("the geometric family needs --q");
        return geometric_knots(internal, *cfg.q, a, b);
      case Family::Chebyshev: return chebyshev_knots(internal, a, b);
      case Family::Legendre: return legendre_knots(internal, a, b);
      case Family::File: break;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConvergenceFailure) throw;
    throw UsageError(e.what());
  }
  throw UsageError("unsupported family");
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw UsageError("cannot write " + cfg.output);
  file << text;
}

int cmd_gen_knots(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const KnotSequence knots = load_knots(cfg, in);
  std::string text;
  switch (cfg.format) {
    case Format::Json: text = knots_to_json(knots) + "\n"; break;
    case Format::Csv:
      text = "k,x\n";
      for (int k = 0; k <= knots.n(); ++k) {
        text += std::to_string(k) + "," + format_real(knots.x(k)) + "\n";
      }
      break;
    case Format::Pretty:
      for (int k = 0; k <= knots.n(); ++k) {
        text += format_real(knots.x(k)) + (k == knots.n() ? "\n" : " ");
      }
      break;
  }
  emit(cfg, out, text);
  return kOk;
}

int cmd_rule(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const KnotSequence knots = load_knots(cfg, in);
  const QuadratureRule rule = compute_rule(knots);
  std::string text;
  switch (cfg.format) {
    case Format::Json: text = rule_to_json(rule) + "\n"; break;
    case Format::Csv: text = rule_to_csv(rule); break;
    case Format::Pretty: text = rule_to_pretty(rule, cfg.normalize); break;
  }
  emit(cfg, out, text);
  return kOk;
}

json check(const std::string& name, bool passed, double value,
           const std::string& detail) {
  return json{{"name", name}, {"passed", passed}, {"value", value},
              {"detail", detail}};
}

int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const KnotSequence knots = load_knots(cfg, in);
  QuadratureRule rule = compute_rule(knots);
  if (cfg.perturb != 0.0) rule.weights.front() += cfg.perturb;
  const int n = knots.n();

  json checks = json::array();

  double worst = 0.0;
  for (int t = 0; t < cfg.trials; ++t) {
    const SplineFunction s = random_spline(knots, cfg.seed + static_cast<std::uint64_t>(t));
    const double exact = exact_integral(s);
    const double got = apply(rule, [&](double x) { return s(x); });
    worst = std::max(worst, std::abs(got - exact) / (1.0 + std::abs(exact)));
  }
  checks.push_back(check("spline_exactness", worst <= 1e-12, worst,
                         std::to_string(cfg.trials) +
                             " random splines, relative residual <= 1e-12"));

  double basis_worst = 0.0;
  for (int j = 1; j <= basis_dimension(knots); ++j) {
    const double got = apply(rule, [&](double x) { return eval_basis(knots, j, x); });
    basis_worst = std::max(basis_worst, std::abs(got - integral_basis(knots, j)));
  }
  checks.push_back(check("basis_exactness", basis_worst <= 1e-12, basis_worst,
                         "every D_j, absolute residual <= 1e-12"));

  checks.push_back(check("node_count", static_cast<int>(rule.size()) == n + 1,
                         static_cast<double>(rule.size()), "n + 1 nodes"));

  const NodePlacement placement = node_placement(rule);
  std::string counts;
  for (int c : placement.per_interval) counts += std::to_string(c);
  checks.push_back(check("node_location", has_gaussian_placement(rule),
                         placement.at_midpoint,
                         "nodes per interval " + counts + ", at midpoint " +
                             std::to_string(placement.at_midpoint) +
                             ", within rounding of a knot " +
                             std::to_string(placement.near_knots)));

  const double min_weight = *std::min_element(rule.weights.begin(), rule.weights.end());
  checks.push_back(check("weight_positivity", min_weight > 0.0, min_weight,
                         "all weights > 0"));

  bool symmetric = true;
  const double sum = knots.a() + knots.b();
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const std::size_t m = rule.size() - 1 - i;
    const double slack = 4.0 * std::numeric_limits<double>::epsilon() *
                         std::max(std::abs(knots.a()), std::abs(knots.b()));
    symmetric = symmetric &&
                std::abs(rule.nodes[m] + rule.nodes[i] - sum) <= slack &&
                rule.weights[m] == rule.weights[i];
  }
  checks.push_back(check("symmetry", symmetric, 0.0,
                         "tau_{n+2-i} = a + b - tau_i, w_{n+2-i} = w_i"));

  const int per_segment = std::max(8, 10000 / (2 * n + 2));
  const KernelScanReport scan = kernel_sign_scan(rule, per_segment);
  checks.push_back(check("kernel_sign", scan.passed(), scan.min_value,
                         std::to_string(scan.samples) + " samples, " +
                             std::to_string(scan.near_zeros.size()) +
                             " near-zeros"));

  const ErrorConstant constant = error_constant(rule);
  const double rel = std::abs(constant.numeric - constant.quartic_oracle) /
                     std::abs(constant.quartic_oracle);
  checks.push_back(check("error_constant", constant.numeric > 0.0 && rel <= 1e-12,
                         constant.numeric,
                         "kernel integral vs quartic remainder, relative " +
                             format_real(rel)));
  checks.push_back(check("error_constant_closed_form",
                         constant.closed_form.full_range_matches,
                         constant.closed_form.full_range,
                         "symmetric full-range closed form vs kernel integral"));

  bool all = true;
  for (const auto& c : checks) all = all && c["passed"].get<bool>();

  const WeightTrend trend = observe_weight_trend(rule);
  json report{
      {"knots", json::parse(knots_to_json(knots))},
      {"n", n},
      {"seed", cfg.seed},
      {"checks", checks},
      {"observations",
       {{"weights_increase_to_middle", trend.increasing},
        {"weight_trend_violations", trend.violations},
        {"printed_closed_form", constant.closed_form.as_printed},
        {"printed_closed_form_matches", constant.closed_form.as_printed_matches}}},
      {"passed", all},
  };
  emit(cfg, out, report.dump(2) + "\n");
  return all ? kOk : kVerificationFailed;
}

std::vector<double> parse_sweep(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad --q-sweep '" + text + "', expected start:stop:step");
    }
  }
  if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
    throw UsageError("bad --q-sweep '" + text + "', expected start:stop:step");
  }
  std::vector<double> qs;
  const auto count = static_cast<int>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
  for (int i = 0; i <= count; ++i) qs.push_back(parts[0] + i * parts[2]);
  return qs;
}

int cmd_kernel_sweep(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family != Family::Geometric) {
    throw UsageError("--q-sweep needs --family geometric");
  }
  if (cfg.q) throw UsageError("--q and --q-sweep are exclusive");
  if (cfg.output.empty()) {
    throw UsageError("--q-sweep writes one CSV per q into --output DIR");
  }
  if (!cfg.internal && !cfg.intervals) {
    throw UsageError("missing knot count: pass --N or --n");
  }
  const int internal = cfg.internal ? *cfg.internal : *cfg.intervals - 1;
  const std::vector<double> qs = parse_sweep(cfg.q_sweep);
  std::filesystem::create_directories(cfg.output);

  struct Result {
    std::string file;
    double constant;
  };
  std::vector<std::future<Result>> jobs;
  for (double q : qs) {
    jobs.push_back(std::async(std::launch::async, [&cfg, internal, q] {
      const QuadratureRule rule = compute_rule(
          geometric_knots(internal, q, cfg.domain[0], cfg.domain[1]));
      char name[64];
      std::snprintf(name, sizeof name, "kernel_q%.6g.csv", q);
      const auto path = std::filesystem::path(cfg.output) / name;
      std::ofstream file(path);
      write_kernel_csv(file, rule, cfg.grid);
      return Result{path.string(), constant_numeric(rule)};
    }));
  }

  out << "q,constant_numeric,file\n";
  std::vector<double> constants;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Result r = jobs[i].get();
    constants.push_back(r.constant);
    out << format_real(qs[i]) << ',' << format_real(r.constant) << ',' << r.file
        << '\n';
  }
  bool up = true, down = true;
  for (std::size_t i = 1; i < constants.size(); ++i) {
    up = up && constants[i] > constants[i - 1];
    down = down && constants[i] < constants[i - 1];
  }
  out << "# trend: " << (up ? "increasing" : down ? "decreasing" : "non-monotone")
      << '\n';
  return kOk;
}

int cmd_kernel(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.grid < 2) throw UsageError("--grid must be >= 2");
  if (!cfg.q_sweep.empty()) return cmd_kernel_sweep(cfg, out);
  const QuadratureRule rule = compute_rule(load_knots(cfg, in));
  std::ostringstream text;
  write_kernel_csv(text, rule, cfg.grid);
  emit(cfg, out, text.str());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian quadrature for C1 cubic splines on symmetrically "
               "stretched knot sequences"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* gen = app.add_subcommand("gen-knots", "generate a knot sequence");
  add_knot_source(gen, cfg);
  add_format(gen, cfg);

  auto* rule = app.add_subcommand("rule", "compute nodes and weights");
  add_knot_source(rule, cfg);
  add_format(rule, cfg);
  rule->add_flag("--normalize", cfg.normalize,
                 "map the rule to [0, 1] (pretty format)");

  auto* verify = app.add_subcommand("verify", "run the verification checks");
  add_knot_source(verify, cfg);
  verify->add_option("--output", cfg.output, "report file (default stdout)");
  verify->add_option("--seed", cfg.seed, "seed of the first random spline");
  verify->add_option("--trials", cfg.trials, "number of random splines")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--perturb", cfg.perturb,
                     "add this amount to the first weight before checking");

  auto* kernel = app.add_subcommand("kernel", "emit the Peano kernel as CSV");
  add_knot_source(kernel, cfg);
  kernel->add_option("--output", cfg.output,
                     "output file, or directory with --q-sweep");
  kernel->add_option("--grid", cfg.grid, "number of grid cells");
  kernel->add_option("--q-sweep", cfg.q_sweep,
                     "start:stop:step over geometric ratios");

  std::vector<std::string> argv_store{"spline-gauss"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (const char* env = std::getenv("SPLINE_GAUSS_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: SPLINE_GAUSS_SEED is not an unsigned integer\n";
      return kUsageError;
    }
  }
  if (cfg.domain.size() != 2 || !(cfg.domain[0] < cfg.domain[1])) {
    err << "error: --domain needs a < b\n";
    return kUsageError;
  }

  try {
    if (gen->parsed()) return cmd_gen_knots(cfg, in, out);
    if (rule->parsed()) return cmd_rule(cfg, in, out);
    if (verify->parsed()) return cmd_verify(cfg, in, out);
    return cmd_kernel(cfg, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace spline_gauss::cli
