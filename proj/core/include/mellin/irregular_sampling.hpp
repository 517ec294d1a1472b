#pragma once

#include <span>
#include <vector>

#include "mellin/bernstein.hpp"
#include "mellin/profile.hpp"
#include "mellin/quadrature.hpp"

namespace mellin {

/// Strict bound on sup |t_k - k| for admissible node sets.
inline constexpr double kKadecBound = 0.25;

/// Real nodes t_k, |k| <= M, strictly increasing with sup |t_k - k| < 1/4.
class NodeSequence {
 public:
  long half_count() const noexcept { return static_cast<long>(nodes_.size() / 2); }
  double deviation() const noexcept { return deviation_; }
  double node(long k) const { return nodes_.at(static_cast<std::size_t>(k + half_count())); }
  std::span<const double> nodes() const noexcept { return nodes_; }

 private:
  friend NodeSequence validate_nodes(std::span<const double> raw);
  NodeSequence(std::vector<double> nodes, double deviation)
      : nodes_(std::move(nodes)), deviation_(deviation) {}

  std::vector<double> nodes_;
  double deviation_;
};

/// `raw` holds t_{-M}, ..., t_M (odd length, centred on index M).
/// Throws Error(LengthMismatch) for even or empty input, Error(NonMonotone)
/// if the nodes are not strictly increasing, Error(DeviationTooLarge) if
/// sup |t_k - k| >= 1/4.
NodeSequence validate_nodes(std::span<const double> raw);

/// t_k = k for |k| <= M.
NodeSequence integer_nodes(long half_count);

/// The entire function
///   G(z) = (z - t_0) prod_{k>=1} (1 - z/t_k)(1 - z/t_{-k})
/// with the product taken over |k| <= K from the node set. Factors with
/// k > K use integer nodes, whose product has the closed form
///   prod_{k>K} (1 - z^2/k^2) = (K!)^2 / (Gamma(K+1-z) Gamma(K+1+z)).
/// G'(t_j) for |j| <= K is the exact derivative of that model, cached at
/// construction.
class HigginsKernel {
 public:
  /// Throws Error(InvalidArgument) unless 1 <= K <= nodes.half_count().
  HigginsKernel(NodeSequence nodes, long K);

  const NodeSequence& nodes() const noexcept { return nodes_; }
  long truncation() const noexcept { return K_; }
  double node(long k) const { return nodes_.node(k); }

  double G(double z) const;
  /// Throws Error(IndexOutOfRange) for |j| > K.
  double G_prime(long j) const;

 private:
  double derivative_at_node(long j) const;

  NodeSequence nodes_;
  long K_;
  std::vector<double> g_prime_;  // index j + K
};

double higgins_G(const HigginsKernel& kernel, double z);
double higgins_G_prime(const HigginsKernel& kernel, long j);

/// sum_{|k|<=K} samples[k+K] G(t) / (G'(t_k)(t - t_k)); returns samples[k+K]
/// directly when |t - t_k| < 1e-12. Throws Error(LengthMismatch) unless
/// samples.size() == 2K+1.
double cardinal_reconstruct(const HigginsKernel& kernel, std::span<const double> samples,
                            double t);

/// Evaluates a paired function at t_k, |k| <= K. A node with |t_k| < 1e-12 is
/// sampled at exactly 0, which for Psi selects the Theta pairing.
std::vector<double> sample_at_nodes(const PairedFunction& paired, const HigginsKernel& kernel);

/// Psi(t) rebuilt from Psi(t_k). Needs band_limit <= pi and 1 < p < inf.
double reconstruct_psi_irregular(const MellinProfile& f, const MellinProfile& g,
                                 const HigginsKernel& kernel, double t,
                                 const QuadratureSpec& quad);

/// Phi(t) rebuilt from Phi(t_k) for f of type at most pi - delta.
/// Throws Error(InvalidArgument) unless 0 < delta < pi and
/// Error(BandLimitExceeded) if f.band_limit() > pi - delta.
double reconstruct_phi_seip(const MellinProfile& f, const MellinProfile& g, double delta,
                            const HigginsKernel& kernel, double t,
                            const QuadratureSpec& quad);

/// Precondition checks shared by the CLI's tabulating path.
void check_psi_preconditions(const MellinProfile& f);
void check_seip_preconditions(const MellinProfile& f, double delta);

}  // namespace mellin
