#include "mellin/irregular_sampling.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "mellin/compensated_sum.hpp"
#include "mellin/error.hpp"

namespace mellin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNodeSnap = 1e-12;
constexpr double kBandSlack = 1e-12;

// Running product kept as mantissa * 2^exponent so long products of O(k)
// factors neither overflow nor underflow.
class ScaledProduct {
 public:
  void multiply(double factor) noexcept {
    if (factor == 0.0) {
      zero_ = true;
      return;
    }
    int e = 0;
    mantissa_ = std::frexp(mantissa_ * factor, &e);
    exponent_ += e;
  }
  // Multiplies by exp(log_factor) without forming it, so huge and tiny
  // factors cancel exactly in the exponent.
  void multiply_exp(double log_factor) noexcept {
    const double n = std::floor(log_factor / std::numbers::ln2);
    multiply(std::exp(log_factor - n * std::numbers::ln2));
    exponent_ += static_cast<long>(n);
  }

  double value() const noexcept {
    if (zero_) return 0.0;
    return std::ldexp(mantissa_, static_cast<int>(exponent_));
  }

 private:
  double mantissa_ = 1.0;
  long exponent_ = 0;
  bool zero_ = false;
};

// (K!)^2 / (Gamma(K+1-z) Gamma(K+1+z)) = prod_{k>K} (1 - z^2/k^2): the
// integer-node tail of the product, applied in log form.
void multiply_tail(ScaledProduct& prod, long K, double z) {
  const double a = static_cast<double>(K) + 1.0 - z;
  const double b = static_cast<double>(K) + 1.0 + z;
  auto is_pole = [](double x) { return x <= 0.0 && x == std::floor(x); };
  if (is_pole(a) || is_pole(b)) {
    prod.multiply(0.0);
    return;
  }
  int sa = 1;
  int sb = 1;
  const double la = boost::math::lgamma(a, &sa);
  const double lb = boost::math::lgamma(b, &sb);
  const double lk = boost::math::lgamma(static_cast<double>(K) + 1.0);
  prod.multiply(static_cast<double>(sa * sb));
  prod.multiply_exp(2.0 * lk - la - lb);
}

}  // namespace

NodeSequence validate_nodes(std::span<const double> raw) {
  if (raw.empty() || raw.size() % 2 == 0) {
    throw Error(ErrorKind::LengthMismatch,
                "validate_nodes: need an odd number of nodes t_{-M}..t_M, got " +
                    std::to_string(raw.size()));
  }
  const long M = static_cast<long>(raw.size() / 2);
  double deviation = 0.0;
  long worst = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const long k = static_cast<long>(i) - M;
    if (!std::isfinite(raw[i])) {
      throw Error(ErrorKind::InvalidArgument,
                  "validate_nodes: node t_" + std::to_string(k) + " is not finite");
    }
    if (i > 0 && !(raw[i] > raw[i - 1])) {
      std::ostringstream msg;
      msg << "validate_nodes: nodes must be strictly increasing, but t_" << k << " = "
          << raw[i] << " <= t_" << (k - 1) << " = " << raw[i - 1];
      throw Error(ErrorKind::NonMonotone, msg.str());
    }
    const double d = std::fabs(raw[i] - static_cast<double>(k));
    if (d > deviation) {
      deviation = d;
      worst = k;
    }
  }
  if (!(deviation < kKadecBound)) {
    std::ostringstream msg;
    msg << "validate_nodes: sup |t_k - k| = " << deviation << " (at k = " << worst
        << ") violates the bound sup |t_k - k| < 1/4";
    throw Error(ErrorKind::DeviationTooLarge, msg.str());
  }
  return NodeSequence(std::vector<double>(raw.begin(), raw.end()), deviation);
}

NodeSequence integer_nodes(long half_count) {
  if (half_count < 1) {
    throw Error(ErrorKind::InvalidArgument, "integer_nodes: half_count must be >= 1");
  }
  std::vector<double> raw;
  for (long k = -half_count; k <= half_count; ++k) raw.push_back(static_cast<double>(k));
  return validate_nodes(raw);
}

HigginsKernel::HigginsKernel(NodeSequence nodes, long K) : nodes_(std::move(nodes)), K_(K) {
  if (K < 1 || K > nodes_.half_count()) {
    throw Error(ErrorKind::InvalidArgument,
                "HigginsKernel: truncation K = " + std::to_string(K) + " must lie in [1, " +
                    std::to_string(nodes_.half_count()) + "]");
  }
  g_prime_.reserve(static_cast<std::size_t>(2 * K + 1));
  for (long j = -K; j <= K; ++j) g_prime_.push_back(derivative_at_node(j));
}

double HigginsKernel::G(double z) const {
  const double t0 = nodes_.node(0);
  ScaledProduct prod;
  prod.multiply(z - t0);
  for (long k = 1; k <= K_; ++k) {
    const double pair = (1.0 - z / nodes_.node(k)) * (1.0 - z / nodes_.node(-k));
    prod.multiply(pair);
  }
  multiply_tail(prod, K_, z);
  return prod.value();
}

double HigginsKernel::derivative_at_node(long j) const {
  const double t0 = nodes_.node(0);
  const double tj = nodes_.node(j);
  ScaledProduct prod;
  const long aj = j < 0 ? -j : j;
  if (j == 0) {
    // d/dz (z - t0) = 1
  } else {
    prod.multiply(tj - t0);
    // vanishing factor (1 - z/t_j) contributes -1/t_j; its partner stays.
    prod.multiply(-1.0 / tj);
    prod.multiply(1.0 - tj / nodes_.node(-j));
  }
  for (long k = 1; k <= K_; ++k) {
    if (k == aj) continue;
    prod.multiply((1.0 - tj / nodes_.node(k)) * (1.0 - tj / nodes_.node(-k)));
  }
  multiply_tail(prod, K_, tj);
  return prod.value();
}

double HigginsKernel::G_prime(long j) const {
  if (j < -K_ || j > K_) {
    throw Error(ErrorKind::IndexOutOfRange,
                "G_prime: node index " + std::to_string(j) + " outside [-" +
                    std::to_string(K_) + ", " + std::to_string(K_) + "]");
  }
  return g_prime_[static_cast<std::size_t>(j + K_)];
}

double higgins_G(const HigginsKernel& kernel, double z) { return kernel.G(z); }

double higgins_G_prime(const HigginsKernel& kernel, long j) { return kernel.G_prime(j); }

double cardinal_reconstruct(const HigginsKernel& kernel, std::span<const double> samples,
                            double t) {
  const long K = kernel.truncation();
  if (samples.size() != static_cast<std::size_t>(2 * K + 1)) {
    throw Error(ErrorKind::LengthMismatch,
                "cardinal_reconstruct: expected " + std::to_string(2 * K + 1) +
                    " samples, got " + std::to_string(samples.size()));
  }
  for (long k = -K; k <= K; ++k) {
    if (std::fabs(t - kernel.node(k)) < kNodeSnap) {
      return samples[static_cast<std::size_t>(k + K)];
    }
  }
  const double g = kernel.G(t);
  CompensatedSum acc;
  for_each_symmetric(K, [&](long k) {
    const double sample = samples[static_cast<std::size_t>(k + K)];
    if (sample == 0.0) return;
    acc += sample * g / (kernel.G_prime(k) * (t - kernel.node(k)));
  });
  return acc.value();
}

std::vector<double> sample_at_nodes(const PairedFunction& paired, const HigginsKernel& kernel) {
  const long K = kernel.truncation();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(2 * K + 1));
  for (long k = -K; k <= K; ++k) {
    const double tk = kernel.node(k);
    out.push_back(paired(std::fabs(tk) < kNodeSnap ? 0.0 : tk));
  }
  return out;
}

void check_psi_preconditions(const MellinProfile& f) {
  if (f.band_limit() > kPi + kBandSlack) {
    std::ostringstream msg;
    msg << "reconstruct_psi_irregular: band limit " << f.band_limit()
        << " exceeds pi (nodes are Kadec perturbations of the integers)";
    throw Error(ErrorKind::BandLimitExceeded, msg.str());
  }
  const double p = f.lebesgue_index();
  if (!(p > 1.0) || std::isinf(p)) {
    std::ostringstream msg;
    msg << "reconstruct_psi_irregular: needs 1 < p < inf, got p = " << p;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
}

void check_seip_preconditions(const MellinProfile& f, double delta) {
  if (!(delta > 0.0 && delta < kPi)) {
    std::ostringstream msg;
    msg << "reconstruct_phi_seip: delta must lie in (0, pi), got " << delta;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
  if (f.band_limit() > kPi - delta + kBandSlack) {
    std::ostringstream msg;
    msg << "reconstruct_phi_seip: band limit " << f.band_limit() << " exceeds pi - delta = "
        << (kPi - delta);
    throw Error(ErrorKind::BandLimitExceeded, msg.str());
  }
}

double reconstruct_psi_irregular(const MellinProfile& f, const MellinProfile& g,
                                 const HigginsKernel& kernel, double t,
                                 const QuadratureSpec& quad) {
  check_psi_preconditions(f);
  const auto samples = sample_at_nodes(pair_psi(f, g, quad), kernel);
  return cardinal_reconstruct(kernel, samples, t);
}

double reconstruct_phi_seip(const MellinProfile& f, const MellinProfile& g, double delta,
                            const HigginsKernel& kernel, double t,
                            const QuadratureSpec& quad) {
  check_seip_preconditions(f, delta);
  const auto samples = sample_at_nodes(pair_phi(f, g, quad), kernel);
  return cardinal_reconstruct(kernel, samples, t);
}

}  // namespace mellin
