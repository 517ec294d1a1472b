#include "cli/commands.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "cli/formats.hpp"
#include "mellin/bernstein.hpp"
#include "mellin/error.hpp"
#include "mellin/irregular_sampling.hpp"
#include "mellin/quadrature.hpp"
#include "mellin/regular_sampling.hpp"
#include "mellin/riesz_boas.hpp"

namespace mellin::cli {

namespace {

using Json = nlohmann::ordered_json;

double conjugate(double p) {
  if (std::isinf(p)) return 1.0;
  if (p == 1.0) return kInfinity;
  return p / (p - 1.0);
}

QuadratureSpec quadrature(const RunConfig& cfg) {
  QuadratureSpec quad;
  quad.tolerance = cfg.tolerance;
  return quad;
}

Evaluation finish(std::vector<double> taus, std::vector<double> estimates,
                  const std::function<double(double)>* truth) {
  Evaluation out;
  out.rows.reserve(taus.size());
  double max_error = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    PointRow row{taus[i], std::nullopt, estimates[i], std::nullopt};
    if (truth) {
      row.truth = (*truth)(taus[i]);
      row.error = std::fabs(estimates[i] - *row.truth);
      max_error = std::max(max_error, *row.error);
      sum_sq += *row.error * *row.error;
    }
    out.rows.push_back(row);
  }
  if (truth && !taus.empty()) {
    out.max_error = max_error;
    out.rms_error = std::sqrt(sum_sq / static_cast<double>(taus.size()));
  }
  return out;
}

std::vector<double> log_points(std::span<const double> taus) {
  std::vector<double> ts;
  ts.reserve(taus.size());
  for (double tau : taus) ts.push_back(std::log(tau));
  return ts;
}

SampleSet load_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--input: cannot open '" + path + "'");
  try {
    return read_samples_csv(in);
  } catch (const Error&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw ConfigError("--input: " + std::string(e.what()));
  }
}

NodeSequence load_or_make_nodes(const RunConfig& cfg, long K) {
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw ConfigError("--input: cannot open '" + cfg.input + "'");
    std::vector<double> raw;
    try {
      raw = read_nodes_csv(in);
    } catch (const std::runtime_error& e) {
      throw ConfigError("--input: " + std::string(e.what()));
    }
    return validate_nodes(raw);
  }
  std::vector<double> raw;
  raw.reserve(static_cast<std::size_t>(2 * K + 1));
  for (long k = -K; k <= K; ++k) {
    const double kd = static_cast<double>(k);
    raw.push_back(kd + cfg.perturbation * std::sin(kd));
  }
  return validate_nodes(raw);
}

Evaluation evaluate_regular(const RunConfig& cfg, long N, const std::vector<double>& taus) {
  const MellinProfile f = build_function(cfg.function);
  const bool have_truth = cfg.input.empty() || cfg.function_given;
  const std::function<double(double)> truth = [&](double tau) { return f(tau); };

  SampleSet samples = cfg.input.empty()
                          ? sample_profile(f, ExponentialGrid(f.band_limit(), 1.0, N))
                          : load_samples(cfg.input);
  if (N > samples.grid.half_count()) {
    throw ConfigError("--N: " + std::to_string(N) + " exceeds the samples file half count " +
                      std::to_string(samples.grid.half_count()));
  }
  std::vector<double> estimates;
  estimates.reserve(taus.size());
  for (double tau : taus) {
    estimates.push_back(cfg.method == Method::Valiron ? valiron_reconstruct(samples, tau, N)
                                                      : diffquot_reconstruct(samples, tau, N));
  }
  return finish(taus, std::move(estimates), have_truth ? &truth : nullptr);
}

Evaluation evaluate_reconstruct(const RunConfig& cfg, long n, double gamma) {
  const auto taus = cfg.grid.points();
  const QuadratureSpec quad = quadrature(cfg);
  switch (cfg.method) {
    case Method::Valiron:
    case Method::DiffQuot:
      if (cfg.gamma_given && gamma != 1.0) {
        throw ConfigError(std::string("--gamma: ") + to_string(cfg.method) +
                          " samples at gamma = 1");
      }
      return evaluate_regular(cfg, n, taus);
    case Method::WeakShannon: {
      if (!(gamma < 1.0)) throw ConfigError("--gamma: weak-shannon needs 0 < gamma < 1");
      const MellinProfile f = build_function(cfg.function);
      const MellinProfile g = build_partner(cfg.test, f);
      const auto paired = pair_phi(f, g, quad);
      const std::function<double(double)> truth = [&](double tau) {
        return paired(std::log(tau));
      };
      return finish(taus, weak_shannon_tabulate(f, g, gamma, n, log_points(taus), quad),
                    &truth);
    }
    case Method::Higgins:
    case Method::Seip: {
      const MellinProfile f = build_function(cfg.function);
      const MellinProfile g = build_partner(cfg.test, f);
      if (cfg.method == Method::Higgins) {
        check_psi_preconditions(f);
      } else {
        check_seip_preconditions(f, cfg.delta);
      }
      const HigginsKernel kernel(load_or_make_nodes(cfg, n), n);
      const PairedFunction paired =
          cfg.method == Method::Higgins ? pair_psi(f, g, quad) : pair_phi(f, g, quad);
      const auto samples = sample_at_nodes(paired, kernel);
      std::vector<double> estimates;
      for (double tau : taus) {
        estimates.push_back(cardinal_reconstruct(kernel, samples, std::log(tau)));
      }
      const std::function<double(double)> truth = [&](double tau) {
        return paired(std::log(tau));
      };
      return finish(taus, std::move(estimates), &truth);
    }
  }
  throw ConfigError("--method: unsupported");
}

Evaluation evaluate_boas(const RunConfig& cfg, long N) {
  const auto taus = cfg.grid.points();
  const MellinProfile f = build_function(cfg.function);
  const double sigma = cfg.sigma_op.value_or(f.band_limit());
  std::vector<double> estimates;
  estimates.reserve(taus.size());
  if (cfg.power) {
    for (double tau : taus) estimates.push_back(boas_power_apply(f, sigma, cfg.r, N, tau));
  } else {
    const RieszBoasCoeffs coeffs = build_coeffs(cfg.r, sigma, N);
    for (double tau : taus) estimates.push_back(boas_apply(f, coeffs, tau));
  }
  const MellinProfile derivative = apply_theta(f, cfg.r);
  const std::function<double(double)> truth = [&](double tau) { return derivative(tau); };
  return finish(taus, std::move(estimates), &truth);
}

Evaluation evaluate_convolve(const RunConfig& cfg, long N, double gamma) {
  if (!(gamma < 1.0)) throw ConfigError("--gamma: convolution sampling needs 0 < gamma < 1");
  const auto taus = cfg.grid.points();
  const QuadratureSpec quad = quadrature(cfg);
  const MellinProfile f = build_function(cfg.function);
  const MellinProfile h = build_partner(cfg.test, f);
  const std::function<double(double)> truth = [&](double tau) {
    return mellin_convolve(f, h, tau, quad);
  };
  return finish(taus, convolution_sampling_tabulate(f, h, gamma, N, taus, quad), &truth);
}

Json optional_json(const std::optional<double>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json function_json(const FunctionSpec& spec) {
  Json j;
  j["generator"] = spec.generator;
  j["sigma"] = spec.sigma;
  if (spec.generator == "shifted") j["shift"] = spec.shift;
  if (spec.generator == "combo") {
    j["weights"] = spec.weights;
    j["shifts"] = spec.shifts;
  }
  if (spec.generator == "constant") j["value"] = spec.value;
  return j;
}

Json evaluation_json(const Evaluation& eval) {
  Json j;
  j["max_error"] = optional_json(eval.max_error);
  j["rms_error"] = optional_json(eval.rms_error);
  Json points = Json::array();
  for (const auto& row : eval.rows) {
    Json p;
    p["tau"] = row.tau;
    p["truth"] = optional_json(row.truth);
    p["estimate"] = row.estimate;
    p["error"] = optional_json(row.error);
    points.push_back(std::move(p));
  }
  j["points"] = std::move(points);
  return j;
}

void write_table(const std::string& path, const Evaluation& eval) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ConfigError("--table: cannot open '" + path + "' for writing");
  out << "tau,truth,estimate,error\n";
  for (const auto& row : eval.rows) {
    out << format_double(row.tau) << ',' << (row.truth ? format_double(*row.truth) : "") << ','
        << format_double(row.estimate) << ',' << (row.error ? format_double(*row.error) : "")
        << '\n';
  }
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigError("--output: cannot open '" + path + "' for writing");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

bool uses_k(const RunConfig& cfg, BenchTarget target) {
  return target == BenchTarget::Reconstruct &&
         (cfg.method == Method::Higgins || cfg.method == Method::Seip);
}

const char* target_name(BenchTarget target) {
  switch (target) {
    case BenchTarget::Reconstruct: return "reconstruct";
    case BenchTarget::BoasDiff: return "boas-diff";
    case BenchTarget::Convolve: return "convolve";
  }
  return "?";
}

void run_coeffs(const RunConfig& cfg, std::ostream& out) {
  const RieszBoasCoeffs coeffs = build_coeffs(cfg.r, cfg.function.sigma, cfg.max_k);
  out << "m,k," << (coeffs.odd() ? 'A' : 'B') << '\n';
  for (long k = -cfg.max_k; k <= cfg.max_k; ++k) {
    out << coeffs.m() << ',' << k << ',' << format_double(coeffs.at(k)) << '\n';
  }
  out << "# abs_partial_sum=" << format_double(coeffs.abs_partial_sum) << '\n';
  out << "# tail_bound=" << format_double(coeffs.tail_bound) << '\n';
}

void run_sample(const RunConfig& cfg, std::ostream& out) {
  const MellinProfile f = build_function(cfg.function);
  const SampleSet samples = sample_profile(f, ExponentialGrid(f.band_limit(), cfg.gamma, cfg.N));
  write_samples_csv(out, samples, cfg.function.generator);
}

void run_validate_nodes(const RunConfig& cfg, std::ostream& out) {
  const NodeSequence nodes = load_or_make_nodes(cfg, 0);
  Json j;
  j["accepted"] = true;
  j["count"] = nodes.nodes().size();
  j["deviation"] = nodes.deviation();
  j["bound"] = kKadecBound;
  out << j.dump(2) << '\n';
}

template <typename Clock>
double seconds_since(typename Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void run_single(const RunConfig& cfg, BenchTarget target, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const long n = uses_k(cfg, target) ? cfg.K : cfg.N;
  const Evaluation eval = evaluate(cfg, target, n, cfg.gamma);
  Json j;
  j["command"] = to_string(cfg.command);
  if (target == BenchTarget::Reconstruct) j["method"] = to_string(cfg.method);
  if (target == BenchTarget::BoasDiff) {
    j["r"] = cfg.r;
    j["sigma_op"] = cfg.sigma_op.value_or(build_function(cfg.function).band_limit());
    j["power"] = cfg.power;
  }
  j["function"] = function_json(cfg.function);
  if (uses_k(cfg, target)) {
    j["K"] = cfg.K;
  } else {
    j["N"] = cfg.N;
  }
  if (target == BenchTarget::Convolve ||
      (target == BenchTarget::Reconstruct && cfg.method == Method::WeakShannon)) {
    j["gamma"] = cfg.gamma;
  }
  const Json body = evaluation_json(eval);
  for (const auto& [key, value] : body.items()) j[key] = value;
  j["wall_time"] = seconds_since<Clock>(start);
  write_table(cfg.table, eval);
  out << j.dump(2) << '\n';
}

void run_bench(const RunConfig& cfg, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const BenchTarget target = cfg.bench_target;
  std::vector<double> gammas = cfg.bench_gammas;
  if (gammas.empty()) gammas.push_back(cfg.gamma);

  Json series_json = Json::array();
  std::optional<Evaluation> last;
  std::optional<double> first_slope;
  for (double gamma : gammas) {
    ConvergenceSeries series;
    series.gamma = gamma;
    for (long n : cfg.sweep) {
      Evaluation eval = evaluate(cfg, target, n, gamma);
      if (!eval.max_error) throw ConfigError("--function: bench needs a truth profile");
      series.truncations.push_back(n);
      series.max_errors.push_back(*eval.max_error);
      last = std::move(eval);
    }
    series.slope = fit_loglog_slope(series.truncations, series.max_errors);
    if (series_json.empty()) first_slope = series.slope;
    Json s;
    if (target != BenchTarget::BoasDiff) s["gamma"] = gamma;
    Json points = Json::array();
    for (std::size_t i = 0; i < series.truncations.size(); ++i) {
      Json p;
      p[uses_k(cfg, target) ? "K" : "N"] = series.truncations[i];
      p["max_error"] = series.max_errors[i];
      points.push_back(std::move(p));
    }
    s["convergence"] = std::move(points);
    s["slope"] = optional_json(series.slope);
    series_json.push_back(std::move(s));
  }

  Json j;
  j["command"] = "bench";
  j["target"] = target_name(target);
  if (target == BenchTarget::Reconstruct) j["method"] = to_string(cfg.method);
  if (target == BenchTarget::BoasDiff) j["r"] = cfg.r;
  j["function"] = function_json(cfg.function);
  j["convergence_series"] = std::move(series_json);
  j["slope"] = optional_json(first_slope);
  if (last) {
    j["max_error"] = optional_json(last->max_error);
    j["rms_error"] = optional_json(last->rms_error);
    write_table(cfg.table, *last);
  }
  j["wall_time"] = seconds_since<Clock>(start);
  out << j.dump(2) << '\n';
}

}  // namespace

MellinProfile build_function(const FunctionSpec& spec) {
  const double p = spec.lebesgue_index;
  if (spec.generator == "fejer") return make_fejer(spec.sigma, p);
  if (spec.generator == "wave") return make_wave(spec.sigma);
  if (spec.generator == "shifted") return make_shifted(spec.sigma, spec.shift, p);
  if (spec.generator == "combo") return make_combo(spec.sigma, spec.weights, spec.shifts, p);
  if (spec.generator == "constant") return make_constant(spec.value, spec.sigma);
  throw ConfigError("--function: unknown generator '" + spec.generator + "'");
}

MellinProfile build_partner(const FunctionSpec& spec, const MellinProfile& f) {
  FunctionSpec partner = spec;
  partner.lebesgue_index = conjugate(f.lebesgue_index());
  return build_function(partner).with_lebesgue_index(partner.lebesgue_index);
}

Evaluation evaluate(const RunConfig& cfg, BenchTarget target, long n, double gamma) {
  switch (target) {
    case BenchTarget::Reconstruct: return evaluate_reconstruct(cfg, n, gamma);
    case BenchTarget::BoasDiff: return evaluate_boas(cfg, n);
    case BenchTarget::Convolve: return evaluate_convolve(cfg, n, gamma);
  }
  throw ConfigError("--target: unsupported");
}

std::optional<double> fit_loglog_slope(std::span<const long> n, std::span<const double> error) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < n.size() && i < error.size(); ++i) {
    if (!(error[i] > 0.0) || n[i] <= 0) continue;
    const double x = std::log(static_cast<double>(n[i]));
    const double y = std::log(error[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) return std::nullopt;
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  return (count * sxy - sx * sy) / denom;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Sink sink(cfg.output, out);
    switch (cfg.command) {
      case Command::Coeffs: run_coeffs(cfg, sink.get()); break;
      case Command::Sample: run_sample(cfg, sink.get()); break;
      case Command::ValidateNodes: run_validate_nodes(cfg, sink.get()); break;
      case Command::Reconstruct: run_single(cfg, BenchTarget::Reconstruct, sink.get()); break;
      case Command::BoasDiff: run_single(cfg, BenchTarget::BoasDiff, sink.get()); break;
      case Command::Convolve: run_single(cfg, BenchTarget::Convolve, sink.get()); break;
      case Command::Bench: run_bench(cfg, sink.get()); break;
    }
    return 0;
  } catch (const ConfigError& e) {
    err << "mellin: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "mellin: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return 2;
  }
}

}  // namespace mellin::cli
