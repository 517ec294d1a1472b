#include "mellin/sinc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mellin/error.hpp"

namespace mellin {

namespace {

constexpr double kPi = std::numbers::pi;

// Reduces u to r in [-1, 1] with sin(pi*u) = sign * sin(pi*r).
double reduce_mod2(double u) noexcept {
  double r = std::fmod(u, 2.0);  // exact
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  return r;
}

}  // namespace

double sin_pi(double u) noexcept {
  if (!std::isfinite(u)) return std::numeric_limits<double>::quiet_NaN();
  double r = reduce_mod2(u);
  // sin(pi r) = sin(pi (1 - r)) keeps the argument in [-1/2, 1/2].
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double cos_pi(double u) noexcept { return sin_pi(u + 0.5); }

double sinc(double u) noexcept {
  const double x = kPi * u;
  if (std::fabs(u) < 1e-4) {
    const double x2 = x * x;
    // 1 - x^2/3! + x^4/5! - x^6/7! + x^8/9!
    return 1.0 + x2 * (-1.0 / 6.0 +
                       x2 * (1.0 / 120.0 +
                             x2 * (-1.0 / 5040.0 + x2 * (1.0 / 362880.0))));
  }
  return sin_pi(u) / x;
}

double sinc_shifted(double v, long k, double sin_pi_v) noexcept {
  const double d = v - static_cast<double>(k);
  if (std::fabs(d) < 1e-4) return sinc(d);
  const double s = (k % 2 == 0) ? sin_pi_v : -sin_pi_v;
  return s / (kPi * d);
}

namespace {

using Extended = long double;

Extended sinc_ext(Extended u) {
  if (u == 0.0L) return 1.0L;
  const Extended pi = std::numbers::pi_v<long double>;
  return std::sin(pi * u) / (pi * u);
}

Extended binomial(int n, int k) {
  Extended b = 1.0L;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Plain central difference of the given order with step h; its error
// expansion contains only even powers of h.
Extended central_difference(Extended u, int order, Extended h) {
  Extended acc = 0.0L;
  for (int j = 0; j <= order; ++j) {
    const Extended offset = (static_cast<Extended>(order) / 2 - j) * h;
    const Extended term = binomial(order, j) * sinc_ext(u + offset);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc / std::pow(h, static_cast<Extended>(order));
}

}  // namespace

double sinc_derivative(double u, int order) {
  if (order < 1 || order > kMaxSincDerivativeOrder) {
    throw Error(ErrorKind::IndexOutOfRange,
                "sinc_derivative: order " + std::to_string(order) +
                    " outside supported range [1, 12]");
  }
  // Ridders' extrapolation: shrink h geometrically, build a Neville tableau
  // in h^2, keep the entry with the smallest estimated error.
  constexpr int kLevels = 10;
  constexpr Extended kShrink = 1.4L;
  constexpr Extended kShrink2 = kShrink * kShrink;
  std::array<std::array<Extended, kLevels>, kLevels> table{};

  Extended h = 0.6L;
  table[0][0] = central_difference(u, order, h);
  Extended best = table[0][0];
  Extended best_err = std::numeric_limits<Extended>::infinity();
  for (int i = 1; i < kLevels; ++i) {
    h /= kShrink;
    table[0][i] = central_difference(u, order, h);
    Extended factor = kShrink2;
    for (int j = 1; j <= i; ++j) {
      table[j][i] = (table[j - 1][i] * factor - table[j - 1][i - 1]) /
                    (factor - 1.0L);
      factor *= kShrink2;
      const Extended err =
          std::max(std::fabs(table[j][i] - table[j - 1][i]),
                   std::fabs(table[j][i] - table[j - 1][i - 1]));
      if (err <= best_err) {
        best_err = err;
        best = table[j][i];
      }
    }
  }
  return static_cast<double>(best);
}

double sinc_derivative_exact(double u, int order) {
  if (order < 0) {
    throw Error(ErrorKind::IndexOutOfRange,
                "sinc_derivative_exact: negative order");
  }
  if (order == 0) return sinc(u);

  // d^n/du^n sinc(u) = pi^n j^(n)(x), j(x) = sin(x)/x, x = pi*u.
  const double x = kPi * u;
  const double scale = std::pow(kPi, order);
  const int n = order;

  if (std::fabs(x) < 2.0 + 0.5 * n) {
    // j(x) = sum_i (-1)^i x^(2i) / (2i+1)!, so with p = 2i - n
    // j^(n)(x) = sum_{2i >= n} (-1)^i x^p / ((2i+1) p!).
    int i = (n + 1) / 2;
    int p = 2 * i - n;
    double power_over_factorial = (p == 0) ? 1.0 : x;  // x^p / p!
    double acc = 0.0;
    for (; i < 200; ++i, p += 2) {
      const double term = ((i % 2) ? -1.0 : 1.0) * power_over_factorial /
                          (2.0 * i + 1.0);
      acc += term;
      if (std::fabs(term) < 1e-18 * std::max(1.0, std::fabs(acc)) && p > 2) break;
      power_over_factorial *= x * x / ((p + 1.0) * (p + 2.0));
    }
    return scale * acc;
  }

  // Leibniz: j^(n) = sum_k C(n,k) sin^(k)(x) (d/dx)^(n-k) x^-1,
  // (d/dx)^m x^-1 = (-1)^m m! x^-(m+1), sin^(k)(x) = sin(x + k pi/2).
  double acc = 0.0;
  double binom = 1.0;
  double factorial = 1.0;  // (n - k)!
  for (int j = 2; j <= n; ++j) factorial *= j;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * (n - k + 1) / k;
    const int m = n - k;
    const double sin_k = sin_pi(u + 0.5 * k);
    double inv = factorial / std::pow(x, m + 1);
    factorial = (m > 0) ? factorial / m : 1.0;
    if (m % 2) inv = -inv;
    acc += binom * sin_k * inv;
  }
  return scale * acc;
}

}  // namespace mellin
