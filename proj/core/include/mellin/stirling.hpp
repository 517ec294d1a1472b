#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mellin {

/// Stirling numbers of the second kind S(k, r), 0 <= r <= k <= max_order.
///
/// These connect the two ways of writing Theta^k = (x d/dx)^k:
///   Theta^k f(x) = sum_{r=1}^{k} S(k, r) x^r f^(r)(x).
class StirlingTable {
 public:
  /// Largest order whose entries all fit in 64 bits.
  static constexpr int kMaxSupportedOrder = 25;

  explicit StirlingTable(int max_order);

  int max_order() const noexcept { return max_order_; }

  /// Throws Error(IndexOutOfRange) unless 1 <= r <= k <= max_order.
  std::uint64_t operator()(int k, int r) const;

 private:
  int max_order_;
  std::vector<std::uint64_t> entries_;  // row-major, (max_order+1)^2
};

std::uint64_t stirling2(const StirlingTable& table, int k, int r);

/// Theta^order f(x) from ordinary x-derivatives:
/// x_derivatives[j] = f^(j)(x) for j = 0..order.
double theta_power_stirling(const StirlingTable& table, int order, double x,
                            std::span<const double> x_derivatives);

}  // namespace mellin
