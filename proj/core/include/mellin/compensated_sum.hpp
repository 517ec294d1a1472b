#pragma once

#include <cmath>

namespace mellin {

// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays exact
// when an addend is larger in magnitude than the running sum, which happens
// constantly in the alternating series used here.
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  constexpr explicit CompensatedSum(double initial) : sum_(initial) {}

  void add(double value) noexcept {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double value) noexcept {
    add(value);
    return *this;
  }

  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Visits k = 0, 1, -1, 2, -2, ..., N, -N. Every series in the library is
/// summed in this order so results do not depend on how callers iterate.
template <typename Visitor>
void for_each_symmetric(long half_count, Visitor&& visit) {
  visit(0L);
  for (long k = 1; k <= half_count; ++k) {
    visit(k);
    visit(-k);
  }
}

}  // namespace mellin
