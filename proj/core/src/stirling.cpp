#include "mellin/stirling.hpp"

#include <string>

#include "mellin/compensated_sum.hpp"
#include "mellin/error.hpp"

namespace mellin {

StirlingTable::StirlingTable(int max_order) : max_order_(max_order) {
  if (max_order < 1 || max_order > kMaxSupportedOrder) {
    throw Error(ErrorKind::InvalidArgument,
                "StirlingTable: max_order must lie in [1, 25], got " +
                    std::to_string(max_order));
  }
  const auto width = static_cast<std::size_t>(max_order + 1);
  entries_.assign(width * width, 0);
  entries_[0] = 1;  // S(0, 0)
  for (int k = 1; k <= max_order; ++k) {
    for (int r = 1; r <= k; ++r) {
      const std::uint64_t prev_same = entries_[(k - 1) * width + r];
      const std::uint64_t prev_lower = entries_[(k - 1) * width + (r - 1)];
      entries_[k * width + r] = static_cast<std::uint64_t>(r) * prev_same + prev_lower;
    }
  }
}

std::uint64_t StirlingTable::operator()(int k, int r) const {
  if (r < 1 || k < r || k > max_order_) {
    throw Error(ErrorKind::IndexOutOfRange,
                "stirling2: need 1 <= r <= k <= " + std::to_string(max_order_) +
                    ", got k=" + std::to_string(k) + ", r=" + std::to_string(r));
  }
  return entries_[static_cast<std::size_t>(k) * (max_order_ + 1) + r];
}

std::uint64_t stirling2(const StirlingTable& table, int k, int r) {
  return table(k, r);
}

double theta_power_stirling(const StirlingTable& table, int order, double x,
                            std::span<const double> x_derivatives) {
  if (order < 1) {
    throw Error(ErrorKind::InvalidArgument, "theta_power_stirling: order must be >= 1");
  }
  if (x_derivatives.size() < static_cast<std::size_t>(order) + 1) {
    throw Error(ErrorKind::LengthMismatch,
                "theta_power_stirling: need derivatives f^(0)..f^(" +
                    std::to_string(order) + ")");
  }
  CompensatedSum acc;
  double x_power = 1.0;
  for (int j = 1; j <= order; ++j) {
    x_power *= x;
    acc += static_cast<double>(table(order, j)) * x_power * x_derivatives[j];
  }
  return acc.value();
}

}  // namespace mellin
