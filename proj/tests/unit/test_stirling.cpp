#include <doctest.h>

#include <cmath>
#include <vector>

#include "mellin/error.hpp"
#include "mellin/stirling.hpp"

using namespace mellin;

namespace {

// S(k, r) = (1/r!) sum_j (-1)^j C(r, j) (r - j)^k, exact in 64-bit for small k.
long double explicit_stirling(int k, int r) {
  long double sum = 0.0L;
  long double binom = 1.0L;
  long double fact = 1.0L;
  for (int i = 2; i <= r; ++i) fact *= i;
  for (int j = 0; j <= r; ++j) {
    sum += ((j % 2) ? -1.0L : 1.0L) * binom * std::pow(static_cast<long double>(r - j), k);
    binom = binom * (r - j) / (j + 1);
  }
  return sum / fact;
}

}  // namespace

TEST_SUITE("stirling") {

TEST_CASE("stirling2 examples") {
  const StirlingTable table(10);
  CHECK(stirling2(table, 2, 1) == 1);
  CHECK(stirling2(table, 3, 2) == 3);
  for (int k = 1; k <= 10; ++k) CHECK(stirling2(table, k, k) == 1);
}

TEST_CASE("boundary values and recurrence") {
  const StirlingTable table(StirlingTable::kMaxSupportedOrder);
  for (int k = 1; k <= table.max_order(); ++k) {
    CHECK(table(k, 1) == 1);
    CHECK(table(k, k) == 1);
  }
  for (int k = 2; k <= table.max_order(); ++k) {
    for (int r = 2; r < k; ++r) {
      CHECK(table(k, r) == static_cast<std::uint64_t>(r) * table(k - 1, r) + table(k - 1, r - 1));
    }
  }
}

TEST_CASE("table matches the explicit alternating formula") {
  const StirlingTable table(12);
  for (int k = 1; k <= 12; ++k) {
    for (int r = 1; r <= k; ++r) {
      CHECK(static_cast<long double>(table(k, r)) == doctest::Approx(
                static_cast<double>(explicit_stirling(k, r))).epsilon(1e-12));
    }
  }
}

TEST_CASE("row sums are Bell numbers") {
  const StirlingTable table(10);
  const std::vector<std::uint64_t> bell{1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (int k = 1; k <= 10; ++k) {
    std::uint64_t sum = 0;
    for (int r = 1; r <= k; ++r) sum += table(k, r);
    CHECK(sum == bell[static_cast<std::size_t>(k - 1)]);
  }
}

TEST_CASE("index errors") {
  const StirlingTable table(5);
  CHECK_THROWS_AS(table(6, 1), Error);
  CHECK_THROWS_AS(table(3, 4), Error);
  CHECK_THROWS_AS(table(3, 0), Error);
  CHECK_THROWS_AS(StirlingTable(0), Error);
  CHECK_THROWS_AS(StirlingTable(StirlingTable::kMaxSupportedOrder + 1), Error);
}

TEST_CASE("theta_power_stirling on x^a gives a^k x^a") {
  const StirlingTable table(6);
  const double a = 1.7;
  const double x = 2.3;
  for (int k = 1; k <= 6; ++k) {
    std::vector<double> derivs{std::pow(x, a)};
    double coeff = 1.0;
    for (int j = 1; j <= k; ++j) {
      coeff *= (a - j + 1);
      derivs.push_back(coeff * std::pow(x, a - j));
    }
    CHECK(theta_power_stirling(table, k, x, derivs) ==
          doctest::Approx(std::pow(a, k) * std::pow(x, a)).epsilon(1e-12));
  }
}

}
