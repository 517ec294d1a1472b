#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace mellin {

/// Marker for the Lebesgue index p = infinity.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A function f on the positive half-line, stored through its log-coordinate
/// profile h(t) = f(e^t).
///
/// Every Mellin-side object becomes classical in this coordinate: Theta =
/// x d/dx is d/dt, the translation f(e^s x) is a shift of h, and the Haar
/// measure dx/x is dt. The class is a cheap immutable view (shared function
/// core plus an affine reparametrisation and a derivative offset), so
/// translating, reflecting or differentiating never copies user callables.
class MellinProfile {
 public:
  using Function = std::function<double(double)>;
  /// (order, t) -> h^(order)(t), order >= 1.
  using DerivativeFunction = std::function<double(int, double)>;

  /// Order reported for profiles whose derivative callable handles any order.
  static constexpr int kAnyOrder = 1 << 20;

  /// Throws Error(InvalidArgument) if band_limit <= 0 or p is not in [1, inf].
  MellinProfile(Function profile, double band_limit, double lebesgue_index);

  /// Attach analytic derivatives h', h'', ... (list index 0 is h').
  MellinProfile with_derivatives(std::vector<Function> derivatives) const;
  /// Attach a derivative callable valid for orders 1..max_order.
  MellinProfile with_derivative_function(DerivativeFunction derivative,
                                         int max_order = kAnyOrder) const;
  /// Log-coordinate points around which the profile's mass sits. Quadrature
  /// windows are centred on these; profiles without centres (waves,
  /// constants) are integrated over the default window.
  MellinProfile with_centers(std::vector<double> centers) const;
  /// Jump locations (log coordinate); quadrature splits panels there.
  MellinProfile with_breakpoints(std::vector<double> breakpoints) const;
  MellinProfile with_finite_differences(bool enabled) const;
  MellinProfile with_band_limit(double band_limit) const;
  MellinProfile with_lebesgue_index(double lebesgue_index) const;

  /// f(x) = h(ln x). Throws Error(InvalidArgument) for x <= 0.
  double operator()(double x) const;
  /// h(t).
  double at_log(double t) const { return derivative_at_log(0, t); }
  /// h^(order)(t); order 0 is the value. Falls back to finite differences
  /// past the analytic order when enabled, otherwise throws
  /// Error(DerivativeUnavailable).
  double derivative_at_log(int order, double t) const;

  /// Highest derivative order (relative to this view) known in closed form.
  int analytic_order() const noexcept;
  bool can_differentiate(int order) const noexcept;
  bool finite_differences_enabled() const noexcept;

  double band_limit() const noexcept { return band_limit_; }
  double lebesgue_index() const noexcept { return lebesgue_index_; }
  std::vector<double> centers() const;
  std::vector<double> breakpoints() const;

 private:
  struct Core;

  friend MellinProfile mellin_translate(const MellinProfile& f, double t);
  friend MellinProfile mellin_reflect(const MellinProfile& f);
  friend MellinProfile apply_theta(const MellinProfile& f, int r);

  double base_derivative(int order, double s) const;
  double to_base(double t) const noexcept { return direction_ * t + shift_; }
  double from_base(double s) const noexcept { return direction_ * (s - shift_); }

  std::shared_ptr<const Core> core_;
  double band_limit_;
  double lebesgue_index_;
  double direction_ = 1.0;  // +1 or -1
  double shift_ = 0.0;
  int order_offset_ = 0;
};

/// U(t)f: the profile u -> h(u + t). Band limit and index are unchanged.
/// Composition adds shifts exactly, so U(a)U(b) and U(a+b) evaluate
/// identically.
MellinProfile mellin_translate(const MellinProfile& f, double t);

/// x -> f(1/x), i.e. the profile u -> h(-u).
MellinProfile mellin_reflect(const MellinProfile& f);

/// Theta^r f, i.e. the log profile h^(r). Throws Error(DerivativeUnavailable)
/// when r exceeds the analytic order and finite differences are disabled.
MellinProfile apply_theta(const MellinProfile& f, int r);

/// sum_i weight_i * f_i. Band limit is the largest term's; Lebesgue index is
/// the smallest; analytic derivatives are available up to the smallest
/// analytic order among the terms.
MellinProfile linear_combination(
    std::span<const std::pair<double, MellinProfile>> terms);

/// Finite-difference derivative of a callable: central difference with
/// step 1e-5*max(1,|t|) for order 1 (larger steps for higher orders),
/// improved by one Richardson step to fourth order.
double finite_difference(const std::function<double(double)>& fn, int order,
                         double t);

}  // namespace mellin
