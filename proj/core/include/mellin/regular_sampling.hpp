#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mellin/bernstein.hpp"
#include "mellin/profile.hpp"
#include "mellin/quadrature.hpp"

namespace mellin {

/// Nodes x_k = exp(gamma k pi / sigma), |k| <= half_count.
class ExponentialGrid {
 public:
  /// Throws Error(InvalidArgument) unless sigma > 0, 0 < gamma <= 1 and
  /// half_count >= 1.
  ExponentialGrid(double sigma, double gamma, long half_count);

  double sigma() const noexcept { return sigma_; }
  double gamma() const noexcept { return gamma_; }
  long half_count() const noexcept { return half_count_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(2 * half_count_ + 1); }

  /// Log-coordinate spacing gamma pi / sigma.
  double spacing() const noexcept;
  double log_node(long k) const noexcept { return static_cast<double>(k) * spacing(); }
  double node(long k) const noexcept;

 private:
  double sigma_;
  double gamma_;
  long half_count_;
};

/// Samples f(x_k) plus the two anchors f(1) and (Theta f)(1) that the
/// Valiron-Tschakaloff and difference-quotient formulas need. (Theta f)(1)
/// coincides with f'(1) because x = 1.
struct SampleSet {
  ExponentialGrid grid;
  std::vector<double> values;  // values[k + N]
  std::optional<double> anchor_value;
  std::optional<double> anchor_derivative;

  double at(long k) const { return values.at(static_cast<std::size_t>(k + grid.half_count())); }
};

/// The derivative anchor is left empty when Theta f cannot be computed.
SampleSet sample_profile(const MellinProfile& f, const ExponentialGrid& grid);

/// sum_{|k| <= N} samples[k + N] sinc(v - k), summed symmetrically with
/// compensation.
double cardinal_series(std::span<const double> samples, double v);

/// A sinc series in log coordinate over a regular grid:
/// t -> sum_k samples[k] sinc(t / spacing - k).
class RegularSincSeries {
 public:
  RegularSincSeries(ExponentialGrid grid, std::vector<double> samples);

  double operator()(double t) const;
  const ExponentialGrid& grid() const noexcept { return grid_; }
  std::span<const double> samples() const noexcept { return samples_; }

 private:
  ExponentialGrid grid_;
  std::vector<double> samples_;
};

/// Samples a paired function (Phi, Psi, ...) at the grid's log nodes.
RegularSincSeries tabulate_series(const PairedFunction& paired, const ExponentialGrid& grid);

/// Weak Shannon reconstruction of Phi(t) = int f(e^t x) g(x) dx/x from
/// Phi(gamma k pi / sigma), |k| <= N, sigma = f.band_limit(). Requires
/// 0 < gamma < 1.
double weak_shannon_phi(const MellinProfile& f, const MellinProfile& g, double gamma,
                        long N, double t, const QuadratureSpec& quad);

/// Same series evaluated at many t; the Phi samples are computed once.
std::vector<double> weak_shannon_tabulate(const MellinProfile& f, const MellinProfile& g,
                                          double gamma, long N, std::span<const double> ts,
                                          const QuadratureSpec& quad);

/// (f * h)(tau) = int_0^inf f(tau/u) h(u) du/u (h real, so no conjugate).
double mellin_convolve(const MellinProfile& f, const MellinProfile& h, double tau,
                       const QuadratureSpec& quad);

/// Sampling series for f * h with samples taken at tau_k = exp(gamma k pi / sigma).
double convolution_sampling(const MellinProfile& f, const MellinProfile& h, double gamma,
                            long N, double tau, const QuadratureSpec& quad);

/// Same series at many tau; the 2N+1 convolution samples are computed once.
std::vector<double> convolution_sampling_tabulate(const MellinProfile& f, const MellinProfile& h,
                                                  double gamma, long N,
                                                  std::span<const double> taus,
                                                  const QuadratureSpec& quad);

/// Valiron-Tschakaloff partial sum through |k| <= N. Needs a gamma = 1 grid
/// and both anchors.
double valiron_reconstruct(const SampleSet& samples, double tau, long N);

/// Difference-quotient partial sum through |k| <= N. Needs a gamma = 1 grid
/// and both anchors.
double diffquot_reconstruct(const SampleSet& samples, double tau, long N);

}  // namespace mellin
