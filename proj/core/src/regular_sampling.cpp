#include "mellin/regular_sampling.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

#include "mellin/compensated_sum.hpp"
#include "mellin/error.hpp"
#include "mellin/sinc.hpp"

namespace mellin {

namespace {

constexpr double kPi = std::numbers::pi;

void require_oversampling(double gamma, const char* who) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    std::ostringstream msg;
    msg << who << ": gamma must lie strictly between 0 and 1, got " << gamma;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
}

void require_positive_tau(double tau, const char* who) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    std::ostringstream msg;
    msg << who << ": tau must be positive, got " << tau;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
}

// Shared preconditions of the two anchored formulas.
void check_anchored(const SampleSet& samples, long N, double tau, const char* who) {
  require_positive_tau(tau, who);
  if (samples.grid.gamma() != 1.0) {
    std::ostringstream msg;
    msg << who << ": samples must lie on the gamma = 1 grid, got gamma = "
        << samples.grid.gamma();
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
  if (!samples.anchor_value || !samples.anchor_derivative) {
    throw Error(ErrorKind::MissingAnchor,
                std::string(who) + ": anchor_value and anchor_derivative are both required");
  }
  if (N < 0 || N > samples.grid.half_count()) {
    std::ostringstream msg;
    msg << who << ": N = " << N << " outside [0, " << samples.grid.half_count() << "]";
    throw Error(ErrorKind::IndexOutOfRange, msg.str());
  }
  if (samples.values.size() != samples.grid.size()) {
    throw Error(ErrorKind::LengthMismatch, std::string(who) + ": sample count does not match grid");
  }
}

double convolve_log(const MellinProfile& f, const MellinProfile& h, double s,
                    const QuadratureSpec& quad) {
  // f(tau/u) in v = ln u is h_f(s - v): reflect, then translate by -s.
  return mellin_inner(mellin_translate(mellin_reflect(f), -s), h, quad);
}

}  // namespace

ExponentialGrid::ExponentialGrid(double sigma, double gamma, long half_count)
    : sigma_(sigma), gamma_(gamma), half_count_(half_count) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorKind::InvalidArgument, "ExponentialGrid: sigma must be positive");
  }
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "ExponentialGrid: gamma must lie in (0, 1]");
  }
  if (half_count < 1) {
    throw Error(ErrorKind::InvalidArgument, "ExponentialGrid: half_count must be >= 1");
  }
}

double ExponentialGrid::spacing() const noexcept { return gamma_ * kPi / sigma_; }

double ExponentialGrid::node(long k) const noexcept { return std::exp(log_node(k)); }

SampleSet sample_profile(const MellinProfile& f, const ExponentialGrid& grid) {
  SampleSet out{grid, {}, std::nullopt, std::nullopt};
  out.values.reserve(grid.size());
  for (long k = -grid.half_count(); k <= grid.half_count(); ++k) {
    out.values.push_back(f.at_log(grid.log_node(k)));
  }
  out.anchor_value = f.at_log(0.0);
  if (f.can_differentiate(1)) out.anchor_derivative = f.derivative_at_log(1, 0.0);
  return out;
}

double cardinal_series(std::span<const double> samples, double v) {
  if (samples.size() % 2 == 0) {
    throw Error(ErrorKind::LengthMismatch, "cardinal_series: sample count must be odd");
  }
  const long N = static_cast<long>(samples.size() / 2);
  const double sp = sin_pi(v);
  CompensatedSum acc;
  for_each_symmetric(N, [&](long k) {
    acc += samples[static_cast<std::size_t>(k + N)] * sinc_shifted(v, k, sp);
  });
  return acc.value();
}

RegularSincSeries::RegularSincSeries(ExponentialGrid grid, std::vector<double> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) {
    throw Error(ErrorKind::LengthMismatch, "RegularSincSeries: sample count does not match grid");
  }
}

double RegularSincSeries::operator()(double t) const {
  return cardinal_series(samples_, t / grid_.spacing());
}

RegularSincSeries tabulate_series(const PairedFunction& paired, const ExponentialGrid& grid) {
  std::vector<double> samples;
  samples.reserve(grid.size());
  for (long k = -grid.half_count(); k <= grid.half_count(); ++k) {
    samples.push_back(paired(grid.log_node(k)));
  }
  return RegularSincSeries(grid, std::move(samples));
}

double weak_shannon_phi(const MellinProfile& f, const MellinProfile& g, double gamma,
                        long N, double t, const QuadratureSpec& quad) {
  const double ts[] = {t};
  return weak_shannon_tabulate(f, g, gamma, N, ts, quad).front();
}

std::vector<double> weak_shannon_tabulate(const MellinProfile& f, const MellinProfile& g,
                                          double gamma, long N, std::span<const double> ts,
                                          const QuadratureSpec& quad) {
  require_oversampling(gamma, "weak_shannon_phi");
  const ExponentialGrid grid(f.band_limit(), gamma, N);
  const RegularSincSeries series = tabulate_series(pair_phi(f, g, quad), grid);
  std::vector<double> out;
  out.reserve(ts.size());
  for (double t : ts) out.push_back(series(t));
  return out;
}

double mellin_convolve(const MellinProfile& f, const MellinProfile& h, double tau,
                       const QuadratureSpec& quad) {
  require_positive_tau(tau, "mellin_convolve");
  return convolve_log(f, h, std::log(tau), quad);
}

double convolution_sampling(const MellinProfile& f, const MellinProfile& h, double gamma,
                            long N, double tau, const QuadratureSpec& quad) {
  const double taus[] = {tau};
  return convolution_sampling_tabulate(f, h, gamma, N, taus, quad).front();
}

std::vector<double> convolution_sampling_tabulate(const MellinProfile& f, const MellinProfile& h,
                                                  double gamma, long N,
                                                  std::span<const double> taus,
                                                  const QuadratureSpec& quad) {
  require_oversampling(gamma, "convolution_sampling");
  for (double tau : taus) require_positive_tau(tau, "convolution_sampling");
  const ExponentialGrid grid(f.band_limit(), gamma, N);
  std::vector<double> samples;
  samples.reserve(grid.size());
  for (long k = -N; k <= N; ++k) samples.push_back(convolve_log(f, h, grid.log_node(k), quad));
  std::vector<double> out;
  out.reserve(taus.size());
  for (double tau : taus) out.push_back(cardinal_series(samples, std::log(tau) / grid.spacing()));
  return out;
}

double valiron_reconstruct(const SampleSet& samples, double tau, long N) {
  check_anchored(samples, N, tau, "valiron_reconstruct");
  const double s = std::log(tau);
  const double v = samples.grid.sigma() * s / kPi;
  const double sp = sin_pi(v);
  const double base = sinc(v);

  CompensatedSum acc;
  acc += base * *samples.anchor_value;
  acc += s * base * *samples.anchor_derivative;
  for (long k = 1; k <= N; ++k) {
    for (long j : {k, -k}) {
      // sigma/(j pi) * ln tau = v / j
      acc += samples.at(j) * (v / static_cast<double>(j)) * sinc_shifted(v, j, sp);
    }
  }
  return acc.value();
}

double diffquot_reconstruct(const SampleSet& samples, double tau, long N) {
  check_anchored(samples, N, tau, "diffquot_reconstruct");
  const double s = std::log(tau);
  const double sigma = samples.grid.sigma();
  const double v = sigma * s / kPi;
  const double sp = sin_pi(v);
  const double f1 = *samples.anchor_value;

  CompensatedSum series;
  for (long k = 1; k <= N; ++k) {
    for (long j : {k, -k}) {
      const double node = static_cast<double>(j) * kPi / sigma;
      series += (samples.at(j) - f1) / node * sinc_shifted(v, j, sp);
    }
  }
  CompensatedSum acc;
  acc += f1;
  acc += s * *samples.anchor_derivative * sinc(v);
  acc += s * series.value();
  return acc.value();
}

}  // namespace mellin
