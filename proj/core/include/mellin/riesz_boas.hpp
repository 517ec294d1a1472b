#pragma once

#include <span>
#include <vector>

#include "mellin/profile.hpp"

namespace mellin {

/// Truncation used by the operators when callers have no preference.
inline constexpr long kDefaultBoasHalfCount = 4096;

/// A_{m,k} = (2m-1)! / (pi (k-1/2)^{2m}) sum_{j<m} (-1)^j (pi(k-1/2))^{2j} / (2j)!
/// Throws Error(InvalidArgument) for m < 1.
double coeff_A(int m, long k);

/// B_{m,k} = (2m)! / (pi k^{2m+1}) sum_{j<m} (-1)^j (pi k)^{2j+1} / (2j+1)!,
/// B_{m,0} = (-1)^{m+1} pi^{2m} / (2m+1). Throws Error(InvalidArgument) for m < 1.
double coeff_B(int m, long k);

/// Unsigned coefficient table for R^(r)(sigma) truncated at |k| <= N:
/// A_{m,k} for odd r = 2m-1, B_{m,k} for even r = 2m.
struct RieszBoasCoeffs {
  int order = 1;
  double sigma = 0.0;
  long half_count = 0;
  std::vector<double> table;     // table[k + N]
  double abs_partial_sum = 0.0;  // sum_{|k|<=N} |c_k|
  /// Upper bound for sum_{|k|>N} |c_k|; infinite when N is too small for the
  /// bound to apply.
  double tail_bound = 0.0;

  int m() const noexcept { return (order + 1) / 2; }
  bool odd() const noexcept { return order % 2 == 1; }
  double at(long k) const { return table.at(static_cast<std::size_t>(k + half_count)); }
  /// (sigma/pi)^r: the operator's prefactor.
  double scale() const noexcept;
  /// Log-coordinate node of term k: (pi/sigma)(k - 1/2) or (pi/sigma) k.
  double log_offset(long k) const noexcept;
};

/// Throws Error(InvalidArgument) unless r >= 1, sigma > 0 and N >= 1.
RieszBoasCoeffs build_coeffs(int r, double sigma, long N);

/// R^(r)(sigma, N) f(x): the signed, scaled sum of Mellin translates of f.
/// Throws Error(InvalidArgument) for x <= 0. Inputs with band limit above
/// sigma are evaluated anyway; use boas_evaluate to see the flag.
double boas_apply(const MellinProfile& f, const RieszBoasCoeffs& coeffs, double x);

struct BoasEvaluation {
  double value = 0.0;
  /// (sigma/pi)^r * tail_bound * sup|f|, given the caller's sup|f|.
  double truncation_bound = 0.0;
  /// f.band_limit() <= sigma; outside the class the sum need not approximate
  /// Theta^r f.
  bool in_class = true;
};

BoasEvaluation boas_evaluate(const MellinProfile& f, const RieszBoasCoeffs& coeffs, double x,
                             double sup_norm);

/// The profile t -> R^(r)(sigma, N) f(e^t), evaluated lazily. Band limit and
/// index follow f. No derivatives are attached.
MellinProfile riesz_boas_profile(const MellinProfile& f, const RieszBoasCoeffs& coeffs);

/// R(sigma)^r f(x): R^(1)(sigma, N) applied r times through lazy
/// profiles. Cost is (2N+1)^r evaluations of f per point.
double boas_power_apply(const MellinProfile& f, double sigma, int r, long N, double x);

struct SigmaIndependenceReport {
  double max_deviation = 0.0;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double band_limit = 0.0;
  /// Both sigmas are at least the band limit. Otherwise a large deviation is
  /// the expected outcome.
  bool preconditions_met = true;

  /// Deviation within `tolerance` (only meaningful when the preconditions hold).
  bool agrees(double tolerance) const noexcept {
    return preconditions_met && max_deviation <= tolerance;
  }
};

/// max over `grid` (x values) of |R^(r)(sigma1, N) f - R^(r)(sigma2, N) f|.
/// Throws Error(InvalidArgument) for a non-positive sigma or grid point.
SigmaIndependenceReport sigma_independence_check(const MellinProfile& f, int r, double sigma1,
                                                 double sigma2, long N,
                                                 std::span<const double> grid);

}  // namespace mellin
