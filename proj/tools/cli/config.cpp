#include "cli/config.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>

namespace mellin::cli {

namespace {

double parse_double(const std::string& text, const std::string& field) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first < last && *first == ' ') ++first;
  if (std::string_view(first, last - first) == "inf") {
    return std::numeric_limits<double>::infinity();
  }
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError(field + ": cannot parse '" + text + "' as a number");
  }
  return value;
}

double parse_index(const std::string& text, const std::string& field) {
  const double p = parse_double(text, field);
  if (!(p >= 1.0)) throw ConfigError(field + ": Lebesgue index must be >= 1 or inf");
  return p;
}

const std::map<std::string, Method>& method_names() {
  static const std::map<std::string, Method> names{{"weak-shannon", Method::WeakShannon},
                                                   {"valiron", Method::Valiron},
                                                   {"diffquot", Method::DiffQuot},
                                                   {"higgins", Method::Higgins},
                                                   {"seip", Method::Seip}};
  return names;
}

const std::map<std::string, BenchTarget>& target_names() {
  static const std::map<std::string, BenchTarget> names{
      {"reconstruct", BenchTarget::Reconstruct},
      {"boas-diff", BenchTarget::BoasDiff},
      {"convolve", BenchTarget::Convolve}};
  return names;
}

bool known_generator(const std::string& name) {
  return name == "fejer" || name == "wave" || name == "shifted" || name == "combo" ||
         name == "constant";
}

// Raw option strings shared by every subcommand; only one subcommand parses.
struct RawOptions {
  std::string function = "fejer";
  double sigma = 3.141592653589793;
  std::string p = "2";
  double shift = 0.0;
  std::string weights = "1,-0.5";
  std::string shifts = "-0.5,0.75";
  double value = 1.0;
  std::string test = "fejer";
  std::optional<double> test_sigma;
  std::string method = "weak-shannon";
  std::string target = "reconstruct";
  double gamma = 0.5;
  std::string gammas;
  long N = 256;
  long K = 512;
  int r = 1;
  std::optional<double> sigma_op;
  bool power = false;
  long max_k = 100;
  double delta = 0.5;
  double perturbation = 0.0;
  std::string sweep = "64,128,256,512,1024";
  std::string input;
  std::string output;
  std::string table;
  std::string grid = "0.368:2.718:101";
  std::optional<double> tolerance;
};

void add_function_options(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--function", raw.function,
                  "Generator: fejer, wave, shifted, combo, constant");
  sub->add_option("--sigma", raw.sigma, "Exponential type of the generated function");
  sub->add_option("--p", raw.p, "Declared Lebesgue index (number or inf)");
  sub->add_option("--shift", raw.shift, "Log-coordinate shift for 'shifted'");
  sub->add_option("--weights", raw.weights, "Comma-separated weights for 'combo'");
  sub->add_option("--shifts", raw.shifts, "Comma-separated shifts for 'combo'");
  sub->add_option("--value", raw.value, "Value for 'constant'");
}

void add_test_options(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--test", raw.test, "Partner function g (same generators)");
  sub->add_option("--test-sigma", raw.test_sigma, "Type of g (default: --sigma)");
}

void add_io_options(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--output", raw.output, "Output path (default stdout)");
  sub->add_option("--tolerance", raw.tolerance, "Quadrature tolerance");
}

void add_report_options(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--grid", raw.grid, "tau grid start:stop:count");
  sub->add_option("--table", raw.table, "Per-point CSV path");
}

FunctionSpec function_from(const RawOptions& raw) {
  FunctionSpec spec;
  spec.generator = raw.function;
  spec.sigma = raw.sigma;
  spec.lebesgue_index = parse_index(raw.p, "--p");
  spec.shift = raw.shift;
  spec.weights = parse_list(raw.weights, "--weights");
  spec.shifts = parse_list(raw.shifts, "--shifts");
  spec.value = raw.value;
  return spec;
}

void validate_function(const FunctionSpec& spec, const std::string& field,
                       const std::string& sigma_field) {
  if (!known_generator(spec.generator)) {
    throw ConfigError(field + ": unknown generator '" + spec.generator +
                      "' (expected fejer, wave, shifted, combo or constant)");
  }
  if (!(spec.sigma > 0.0) || !std::isfinite(spec.sigma)) {
    throw ConfigError(sigma_field + ": must be positive and finite");
  }
  if (spec.generator == "combo" && spec.weights.size() != spec.shifts.size()) {
    throw ConfigError("--weights/--shifts: lists must have equal length");
  }
}

double conjugate(double p) {
  if (std::isinf(p)) return 1.0;
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  return p / (p - 1.0);
}

}  // namespace

std::vector<double> TauGrid::points() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    out.push_back(start);
    return out;
  }
  const double a = std::log(start);
  const double b = std::log(stop);
  for (long i = 0; i < count; ++i) {
    const double u = a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
    out.push_back(i == 0 ? start : (i == count - 1 ? stop : std::exp(u)));
  }
  return out;
}

TauGrid parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw ConfigError("--grid: expected start:stop:count, got '" + text + "'");
  }
  TauGrid grid;
  grid.start = parse_double(text.substr(0, first), "--grid");
  grid.stop = parse_double(text.substr(first + 1, second - first - 1), "--grid");
  const double count = parse_double(text.substr(second + 1), "--grid");
  if (!(grid.start > 0.0) || !std::isfinite(grid.stop)) {
    throw ConfigError("--grid: tau range must lie in (0, inf)");
  }
  if (grid.stop < grid.start) throw ConfigError("--grid: stop must be >= start");
  if (!(count >= 1.0) || count != std::floor(count)) {
    throw ConfigError("--grid: count must be a positive integer");
  }
  grid.count = static_cast<long>(count);
  return grid;
}

std::vector<double> parse_list(const std::string& text, const std::string& field) {
  std::vector<double> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) throw ConfigError(field + ": empty list entry");
    out.push_back(parse_double(item, field));
  }
  if (out.empty()) throw ConfigError(field + ": list is empty");
  return out;
}

double resolve_tolerance(std::optional<double> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MELLIN_QUAD_TOL")) {
    return parse_double(env, "MELLIN_QUAD_TOL");
  }
  return 1e-9;
}

ParseResult parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"Sampling and Riesz-Boas differentiation for Mellin band-limited functions",
               "mellin"};
  app.require_subcommand(1);
  RawOptions raw;

  auto* coeffs = app.add_subcommand("coeffs", "Print the Riesz-Boas coefficient table");
  coeffs->add_option("--r", raw.r, "Derivative order");
  coeffs->add_option("--max-k", raw.max_k, "Largest |k|");
  coeffs->add_option("--sigma", raw.sigma, "Operator type sigma");
  add_io_options(coeffs, raw);

  auto* sample = app.add_subcommand("sample", "Sample a function on an exponential grid");
  add_function_options(sample, raw);
  sample->add_option("--gamma", raw.gamma, "Grid compression in (0, 1]");
  sample->add_option("--N", raw.N, "Half count of the grid");
  add_io_options(sample, raw);

  auto* reconstruct = app.add_subcommand("reconstruct", "Reconstruct on a tau grid");
  add_function_options(reconstruct, raw);
  add_test_options(reconstruct, raw);
  reconstruct->add_option("--method", raw.method,
                          "weak-shannon, valiron, diffquot, higgins or seip");
  reconstruct->add_option("--gamma", raw.gamma, "Grid compression in (0, 1]");
  reconstruct->add_option("--N", raw.N, "Truncation of regular series");
  reconstruct->add_option("--K", raw.K, "Truncation of irregular series");
  reconstruct->add_option("--delta", raw.delta, "Band margin for seip");
  reconstruct->add_option("--perturbation", raw.perturbation,
                          "Node perturbation a in t_k = k + a sin(k)");
  reconstruct->add_option("--input", raw.input, "Samples CSV (valiron, diffquot) or nodes CSV");
  add_report_options(reconstruct, raw);
  add_io_options(reconstruct, raw);

  auto* boas = app.add_subcommand("boas-diff", "Riesz-Boas differentiation on a grid");
  add_function_options(boas, raw);
  boas->add_option("--r", raw.r, "Derivative order");
  boas->add_option("--N", raw.N, "Truncation");
  boas->add_option("--sigma-op", raw.sigma_op, "Operator sigma (default: --sigma)");
  boas->add_flag("--power", raw.power, "Iterate R^(1) r times instead of R^(r)");
  add_report_options(boas, raw);
  add_io_options(boas, raw);

  auto* nodes = app.add_subcommand("validate-nodes", "Check a node file against the 1/4 bound");
  nodes->add_option("--input", raw.input, "Nodes CSV k,t_k")->required();
  add_io_options(nodes, raw);

  auto* convolve = app.add_subcommand("convolve", "Mellin convolution sampling on a grid");
  add_function_options(convolve, raw);
  add_test_options(convolve, raw);
  convolve->add_option("--gamma", raw.gamma, "Grid compression in (0, 1)");
  convolve->add_option("--N", raw.N, "Truncation");
  add_report_options(convolve, raw);
  add_io_options(convolve, raw);

  auto* bench = app.add_subcommand("bench", "Truncation sweep with fitted log-log slope");
  add_function_options(bench, raw);
  add_test_options(bench, raw);
  bench->add_option("--target", raw.target, "reconstruct, boas-diff or convolve");
  bench->add_option("--method", raw.method, "Reconstruction method");
  bench->add_option("--gamma", raw.gamma, "Grid compression");
  bench->add_option("--gammas", raw.gammas, "Comma-separated gammas, one series each");
  bench->add_option("--sweep", raw.sweep, "Comma-separated truncations");
  bench->add_option("--r", raw.r, "Derivative order (boas-diff)");
  bench->add_option("--sigma-op", raw.sigma_op, "Operator sigma (boas-diff)");
  bench->add_option("--delta", raw.delta, "Band margin for seip");
  bench->add_option("--perturbation", raw.perturbation, "Node perturbation amplitude");
  add_report_options(bench, raw);
  add_io_options(bench, raw);

  ParseResult result;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    result.help_requested = true;
    result.help_text = app.help();
    for (auto* sub : app.get_subcommands()) result.help_text = sub->help();
    return result;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  RunConfig& cfg = result.config;
  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (name == "coeffs") cfg.command = Command::Coeffs;
  if (name == "sample") cfg.command = Command::Sample;
  if (name == "reconstruct") cfg.command = Command::Reconstruct;
  if (name == "boas-diff") cfg.command = Command::BoasDiff;
  if (name == "validate-nodes") cfg.command = Command::ValidateNodes;
  if (name == "convolve") cfg.command = Command::Convolve;
  if (name == "bench") cfg.command = Command::Bench;

  cfg.function = function_from(raw);
  const CLI::Option* function_opt = chosen->get_option_no_throw("--function");
  cfg.function_given = function_opt != nullptr && function_opt->count() > 0;
  if (cfg.command != Command::Coeffs && cfg.command != Command::ValidateNodes) {
    validate_function(cfg.function, "--function", "--sigma");
  } else if (!(raw.sigma > 0.0) || !std::isfinite(raw.sigma)) {
    throw ConfigError("--sigma: must be positive and finite");
  }

  cfg.test = cfg.function;
  cfg.test.generator = raw.test;
  cfg.test.sigma = raw.test_sigma.value_or(raw.sigma);
  cfg.test.lebesgue_index = conjugate(cfg.function.lebesgue_index);
  cfg.test.shift = 0.0;
  if (chosen->get_option_no_throw("--test") != nullptr) {
    validate_function(cfg.test, "--test", "--test-sigma");
  }

  const auto method = method_names().find(raw.method);
  if (method == method_names().end()) {
    throw ConfigError("--method: unknown method '" + raw.method +
                      "' (expected weak-shannon, valiron, diffquot, higgins or seip)");
  }
  cfg.method = method->second;
  const auto target = target_names().find(raw.target);
  if (target == target_names().end()) {
    throw ConfigError("--target: unknown target '" + raw.target +
                      "' (expected reconstruct, boas-diff or convolve)");
  }
  cfg.bench_target = target->second;

  cfg.gamma = raw.gamma;
  const CLI::Option* gamma_opt = chosen->get_option_no_throw("--gamma");
  cfg.gamma_given = gamma_opt != nullptr && gamma_opt->count() > 0;
  if (!(cfg.gamma > 0.0 && cfg.gamma <= 1.0)) {
    throw ConfigError("--gamma: must lie in (0, 1]");
  }
  if (!raw.gammas.empty()) {
    cfg.bench_gammas = parse_list(raw.gammas, "--gammas");
    for (double g : cfg.bench_gammas) {
      if (!(g > 0.0 && g <= 1.0)) throw ConfigError("--gammas: every gamma must lie in (0, 1]");
    }
  }
  if (raw.N < 1) throw ConfigError("--N: must be >= 1");
  if (raw.K < 1) throw ConfigError("--K: must be >= 1");
  if (raw.r < 1) throw ConfigError("--r: must be >= 1");
  if (raw.max_k < 1) throw ConfigError("--max-k: must be >= 1");
  if (raw.sigma_op && !(*raw.sigma_op > 0.0)) throw ConfigError("--sigma-op: must be positive");
  if (!(std::fabs(raw.perturbation) < 0.25)) {
    throw ConfigError("--perturbation: |a| must be below 1/4");
  }
  cfg.N = raw.N;
  cfg.K = raw.K;
  cfg.r = raw.r;
  cfg.max_k = raw.max_k;
  cfg.sigma_op = raw.sigma_op;
  cfg.power = raw.power;
  cfg.delta = raw.delta;
  cfg.perturbation = raw.perturbation;
  cfg.sweep.clear();
  for (double n : parse_list(raw.sweep, "--sweep")) {
    if (!(n >= 1.0) || n != std::floor(n)) {
      throw ConfigError("--sweep: truncations must be positive integers");
    }
    cfg.sweep.push_back(static_cast<long>(n));
  }
  cfg.input = raw.input;
  cfg.output = raw.output;
  cfg.table = raw.table;
  cfg.grid = parse_grid(raw.grid);
  cfg.tolerance = resolve_tolerance(raw.tolerance);
  if (!(cfg.tolerance > 0.0)) throw ConfigError("--tolerance: must be positive");
  return result;
}

const char* to_string(Command command) {
  switch (command) {
    case Command::Coeffs: return "coeffs";
    case Command::Sample: return "sample";
    case Command::Reconstruct: return "reconstruct";
    case Command::BoasDiff: return "boas-diff";
    case Command::ValidateNodes: return "validate-nodes";
    case Command::Convolve: return "convolve";
    case Command::Bench: return "bench";
  }
  return "?";
}

const char* to_string(Method method) {
  switch (method) {
    case Method::WeakShannon: return "weak-shannon";
    case Method::Valiron: return "valiron";
    case Method::DiffQuot: return "diffquot";
    case Method::Higgins: return "higgins";
    case Method::Seip: return "seip";
  }
  return "?";
}

}  // namespace mellin::cli
