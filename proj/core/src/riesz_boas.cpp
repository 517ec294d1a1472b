#include "mellin/riesz_boas.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "mellin/compensated_sum.hpp"
#include "mellin/error.hpp"

namespace mellin {

namespace {

constexpr long double kPiL = std::numbers::pi_v<long double>;
constexpr double kPi = std::numbers::pi;

void require_m(int m, const char* who) {
  if (m < 1) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(who) + ": m must be >= 1, got " + std::to_string(m));
  }
}

long double factorial(int n) {
  long double out = 1.0L;
  for (int i = 2; i <= n; ++i) out *= static_cast<long double>(i);
  return out;
}

// Bound on sum_{|k|>N} |c_k| from |c_k| <= lead * rho / d_k^2, where d_k is
// |k - 1/2| or |k| and rho absorbs the lower-order j-terms once
// pi d_k > 2m.
double coefficient_tail_bound(int r, long N) {
  const int m = (r + 1) / 2;
  const bool odd = r % 2 == 1;
  const double d = odd ? static_cast<double>(N) + 0.5 : static_cast<double>(N) + 1.0;
  const double x = kPi * d;
  const double ratio = 2.0 * m / x;
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  const double rho = 1.0 / (1.0 - ratio * ratio);
  const double lead = odd ? (2.0 * m - 1.0) * std::pow(kPi, 2 * m - 3)
                          : 2.0 * m * std::pow(kPi, 2 * m - 2);
  // sum_{k>N} 1/(k-1/2)^2 <= 1/(N-1/2) and sum_{k>N} 1/k^2 <= 1/N, both sides.
  const double one_side = odd ? 1.0 / (static_cast<double>(N) - 0.5)
                              : 1.0 / static_cast<double>(N);
  return 2.0 * lead * rho * one_side;
}

double signed_term(long k) { return (k % 2 == 0) ? -1.0 : 1.0; }  // (-1)^{k+1}

}  // namespace

double coeff_A(int m, long k) {
  require_m(m, "coeff_A");
  const long double d = static_cast<long double>(k) - 0.5L;
  const long double x = kPiL * d;
  const long double x2 = x * x;
  long double term = 1.0L;  // x^{2j} / (2j)!
  long double sum = 1.0L;
  for (int j = 1; j < m; ++j) {
    term *= -x2 / static_cast<long double>((2 * j - 1) * (2 * j));
    sum += term;
  }
  long double d2m = 1.0L;
  for (int i = 0; i < m; ++i) d2m *= d * d;
  return static_cast<double>(factorial(2 * m - 1) / (kPiL * d2m) * sum);
}

double coeff_B(int m, long k) {
  require_m(m, "coeff_B");
  if (k == 0) {
    long double p = 1.0L;
    for (int i = 0; i < 2 * m; ++i) p *= kPiL;
    const long double sign = (m % 2 == 1) ? 1.0L : -1.0L;
    return static_cast<double>(sign * p / static_cast<long double>(2 * m + 1));
  }
  const long double kk = static_cast<long double>(k);
  const long double x = kPiL * kk;
  const long double x2 = x * x;
  long double term = x;  // x^{2j+1} / (2j+1)!
  long double sum = x;
  for (int j = 1; j < m; ++j) {
    term *= -x2 / static_cast<long double>((2 * j) * (2 * j + 1));
    sum += term;
  }
  long double k2m1 = kk;
  for (int i = 0; i < m; ++i) k2m1 *= kk * kk;
  return static_cast<double>(factorial(2 * m) / (kPiL * k2m1) * sum);
}

double RieszBoasCoeffs::scale() const noexcept { return std::pow(sigma / kPi, order); }

double RieszBoasCoeffs::log_offset(long k) const noexcept {
  const double step = kPi / sigma;
  return odd() ? step * (static_cast<double>(k) - 0.5) : step * static_cast<double>(k);
}

RieszBoasCoeffs build_coeffs(int r, double sigma, long N) {
  if (r < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "build_coeffs: order r must be >= 1, got " + std::to_string(r));
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    std::ostringstream msg;
    msg << "build_coeffs: sigma must be positive and finite, got " << sigma;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
  if (N < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "build_coeffs: half_count N must be >= 1, got " + std::to_string(N));
  }
  RieszBoasCoeffs out;
  out.order = r;
  out.sigma = sigma;
  out.half_count = N;
  const int m = out.m();
  out.table.reserve(static_cast<std::size_t>(2 * N + 1));
  for (long k = -N; k <= N; ++k) {
    out.table.push_back(out.odd() ? coeff_A(m, k) : coeff_B(m, k));
  }
  CompensatedSum abs_sum;
  for_each_symmetric(N, [&](long k) { abs_sum += std::fabs(out.at(k)); });
  out.abs_partial_sum = abs_sum.value();
  out.tail_bound = coefficient_tail_bound(r, N);
  return out;
}

namespace {

// The operator at log coordinate t; profiles evaluated far from the origin
// would underflow e^t.
double apply_at_log(const MellinProfile& f, const RieszBoasCoeffs& coeffs, double t) {
  const long N = coeffs.half_count;
  CompensatedSum acc;
  for_each_symmetric(N, [&](long k) {
    const double c = coeffs.table[static_cast<std::size_t>(k + N)];
    acc += signed_term(k) * c * f.at_log(t + coeffs.log_offset(k));
  });
  return coeffs.scale() * acc.value();
}

}  // namespace

double boas_apply(const MellinProfile& f, const RieszBoasCoeffs& coeffs, double x) {
  if (!(x > 0.0)) {
    std::ostringstream msg;
    msg << "boas_apply: x must be positive, got " << x;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
  return apply_at_log(f, coeffs, std::log(x));
}

BoasEvaluation boas_evaluate(const MellinProfile& f, const RieszBoasCoeffs& coeffs, double x,
                             double sup_norm) {
  BoasEvaluation out;
  out.value = boas_apply(f, coeffs, x);
  out.truncation_bound = coeffs.scale() * coeffs.tail_bound * sup_norm;
  out.in_class = f.band_limit() <= coeffs.sigma;
  return out;
}

MellinProfile riesz_boas_profile(const MellinProfile& f, const RieszBoasCoeffs& coeffs) {
  auto fn = [f, coeffs](double t) { return apply_at_log(f, coeffs, t); };
  return MellinProfile(std::move(fn), f.band_limit(), f.lebesgue_index());
}

double boas_power_apply(const MellinProfile& f, double sigma, int r, long N, double x) {
  if (r < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "boas_power_apply: r must be >= 1, got " + std::to_string(r));
  }
  const RieszBoasCoeffs first = build_coeffs(1, sigma, N);
  MellinProfile current = f;
  for (int i = 1; i < r; ++i) current = riesz_boas_profile(current, first);
  return boas_apply(current, first, x);
}

SigmaIndependenceReport sigma_independence_check(const MellinProfile& f, int r, double sigma1,
                                                 double sigma2, long N,
                                                 std::span<const double> grid) {
  SigmaIndependenceReport out;
  out.sigma1 = sigma1;
  out.sigma2 = sigma2;
  out.band_limit = f.band_limit();
  out.preconditions_met = sigma1 >= f.band_limit() && sigma2 >= f.band_limit();
  const RieszBoasCoeffs c1 = build_coeffs(r, sigma1, N);
  const RieszBoasCoeffs c2 = sigma2 == sigma1 ? c1 : build_coeffs(r, sigma2, N);
  for (double x : grid) {
    const double d = std::fabs(boas_apply(f, c1, x) - boas_apply(f, c2, x));
    if (d > out.max_deviation) out.max_deviation = d;
  }
  return out;
}

}  // namespace mellin
