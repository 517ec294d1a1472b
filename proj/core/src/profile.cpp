#include "mellin/profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mellin/compensated_sum.hpp"
#include "mellin/error.hpp"

namespace mellin {

struct MellinProfile::Core {
  Function value;
  DerivativeFunction derivative;
  int analytic_order = 0;
  bool finite_differences = true;
  std::vector<double> centers;
  std::vector<double> breakpoints;
};

namespace {

void check_band_and_index(double band_limit, double lebesgue_index) {
  if (!(band_limit > 0.0) || !std::isfinite(band_limit)) {
    throw Error(ErrorKind::InvalidArgument,
                "band_limit must be a positive finite number, got " +
                    std::to_string(band_limit));
  }
  if (!(lebesgue_index >= 1.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "lebesgue_index must lie in [1, inf], got " +
                    std::to_string(lebesgue_index));
  }
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

double central_difference(const std::function<double(double)>& fn, int order,
                          double t, double h) {
  CompensatedSum acc;
  for (int j = 0; j <= order; ++j) {
    const double offset = (0.5 * order - j) * h;
    const double term = binomial(order, j) * fn(t + offset);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc.value() / std::pow(h, order);
}

}  // namespace

double finite_difference(const std::function<double(double)>& fn, int order,
                         double t) {
  if (order < 1) {
    throw Error(ErrorKind::InvalidArgument, "finite_difference: order must be >= 1");
  }
  const double scale = std::max(1.0, std::fabs(t));
  // Order 1 uses the fixed 1e-5 step; higher orders balance the O(h^4)
  // truncation against eps/h^order roundoff.
  const double h = (order == 1)
                       ? 1e-5 * scale
                       : scale * std::pow(std::numeric_limits<double>::epsilon(),
                                          1.0 / (order + 4));
  const double coarse = central_difference(fn, order, t, h);
  const double fine = central_difference(fn, order, t, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

MellinProfile::MellinProfile(Function profile, double band_limit,
                             double lebesgue_index)
    : band_limit_(band_limit), lebesgue_index_(lebesgue_index) {
  check_band_and_index(band_limit, lebesgue_index);
  if (!profile) {
    throw Error(ErrorKind::InvalidArgument, "MellinProfile: empty profile callable");
  }
  auto core = std::make_shared<Core>();
  core->value = std::move(profile);
  core_ = std::move(core);
}

MellinProfile MellinProfile::with_derivatives(std::vector<Function> derivatives) const {
  const int count = static_cast<int>(derivatives.size());
  auto list = std::make_shared<std::vector<Function>>(std::move(derivatives));
  return with_derivative_function(
      [list](int order, double t) { return (*list)[order - 1](t); }, count);
}

MellinProfile MellinProfile::with_derivative_function(DerivativeFunction derivative,
                                                      int max_order) const {
  if (direction_ != 1.0 || shift_ != 0.0 || order_offset_ != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "derivatives must be attached before translating or differentiating");
  }
  auto core = std::make_shared<Core>(*core_);
  core->derivative = std::move(derivative);
  core->analytic_order = core->derivative ? std::max(0, max_order) : 0;
  MellinProfile copy = *this;
  copy.core_ = std::move(core);
  return copy;
}

MellinProfile MellinProfile::with_centers(std::vector<double> centers) const {
  auto core = std::make_shared<Core>(*core_);
  core->centers.clear();
  for (double c : centers) core->centers.push_back(to_base(c));
  MellinProfile copy = *this;
  copy.core_ = std::move(core);
  return copy;
}

MellinProfile MellinProfile::with_breakpoints(std::vector<double> breakpoints) const {
  auto core = std::make_shared<Core>(*core_);
  core->breakpoints.clear();
  for (double b : breakpoints) core->breakpoints.push_back(to_base(b));
  MellinProfile copy = *this;
  copy.core_ = std::move(core);
  return copy;
}

MellinProfile MellinProfile::with_finite_differences(bool enabled) const {
  auto core = std::make_shared<Core>(*core_);
  core->finite_differences = enabled;
  MellinProfile copy = *this;
  copy.core_ = std::move(core);
  return copy;
}

MellinProfile MellinProfile::with_band_limit(double band_limit) const {
  check_band_and_index(band_limit, lebesgue_index_);
  MellinProfile copy = *this;
  copy.band_limit_ = band_limit;
  return copy;
}

MellinProfile MellinProfile::with_lebesgue_index(double lebesgue_index) const {
  check_band_and_index(band_limit_, lebesgue_index);
  MellinProfile copy = *this;
  copy.lebesgue_index_ = lebesgue_index;
  return copy;
}

double MellinProfile::operator()(double x) const {
  if (!(x > 0.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "profile evaluated at non-positive x = " + std::to_string(x));
  }
  return at_log(std::log(x));
}

double MellinProfile::base_derivative(int order, double s) const {
  const Core& core = *core_;
  if (order == 0) return core.value(s);
  if (order <= core.analytic_order) return core.derivative(order, s);
  if (!core.finite_differences) {
    throw Error(ErrorKind::DerivativeUnavailable,
                "derivative of order " + std::to_string(order) +
                    " requested but only " + std::to_string(core.analytic_order) +
                    " analytic derivative(s) available and finite differences are disabled");
  }
  // Differentiate the highest analytic derivative numerically.
  const int known = core.analytic_order;
  auto known_fn = [&core, known](double u) {
    return known == 0 ? core.value(u) : core.derivative(known, u);
  };
  return finite_difference(known_fn, order - known, s);
}

double MellinProfile::derivative_at_log(int order, double t) const {
  if (order < 0) {
    throw Error(ErrorKind::InvalidArgument, "negative derivative order");
  }
  const int total = order + order_offset_;
  const double value = base_derivative(total, to_base(t));
  return (direction_ < 0.0 && (total % 2 != 0)) ? -value : value;
}

int MellinProfile::analytic_order() const noexcept {
  return core_->analytic_order - order_offset_;
}

bool MellinProfile::can_differentiate(int order) const noexcept {
  return order <= analytic_order() || core_->finite_differences;
}

bool MellinProfile::finite_differences_enabled() const noexcept {
  return core_->finite_differences;
}

std::vector<double> MellinProfile::centers() const {
  std::vector<double> out;
  for (double c : core_->centers) out.push_back(from_base(c));
  return out;
}

std::vector<double> MellinProfile::breakpoints() const {
  std::vector<double> out;
  for (double b : core_->breakpoints) out.push_back(from_base(b));
  std::sort(out.begin(), out.end());
  return out;
}

MellinProfile mellin_translate(const MellinProfile& f, double t) {
  // h(u + t) in the view's coordinate is base(dir*(u + t) + shift).
  MellinProfile g = f;
  g.shift_ = f.shift_ + f.direction_ * t;
  return g;
}

MellinProfile mellin_reflect(const MellinProfile& f) {
  MellinProfile g = f;
  g.direction_ = -f.direction_;
  // The offset's parity decides whether the reflected derivative flips sign;
  // derivative_at_log() handles that from direction_.
  return g;
}

MellinProfile apply_theta(const MellinProfile& f, int r) {
  if (r < 0) {
    throw Error(ErrorKind::InvalidArgument, "apply_theta: order must be >= 0");
  }
  if (!f.can_differentiate(r)) {
    throw Error(ErrorKind::DerivativeUnavailable,
                "apply_theta: order " + std::to_string(r) +
                    " exceeds the analytic derivatives (" +
                    std::to_string(std::max(0, f.analytic_order())) +
                    ") and finite differences are disabled");
  }
  MellinProfile g = f;
  g.order_offset_ = f.order_offset_ + r;
  return g;
}

MellinProfile linear_combination(
    std::span<const std::pair<double, MellinProfile>> terms) {
  if (terms.empty()) {
    throw Error(ErrorKind::InvalidArgument, "linear_combination: no terms");
  }
  auto parts = std::make_shared<std::vector<std::pair<double, MellinProfile>>>(
      terms.begin(), terms.end());
  double band = 0.0;
  double index = kInfinity;
  int order = MellinProfile::kAnyOrder;
  std::vector<double> centers;
  std::vector<double> breaks;
  for (const auto& [w, f] : *parts) {
    band = std::max(band, f.band_limit());
    index = std::min(index, f.lebesgue_index());
    order = std::min(order, f.analytic_order());
    for (double c : f.centers()) centers.push_back(c);
    for (double b : f.breakpoints()) breaks.push_back(b);
  }
  MellinProfile combo(
      [parts](double t) {
        CompensatedSum acc;
        for (const auto& [w, f] : *parts) acc += w * f.at_log(t);
        return acc.value();
      },
      band, index);
  if (order > 0) {
    combo = combo.with_derivative_function(
        [parts](int k, double t) {
          CompensatedSum acc;
          for (const auto& [w, f] : *parts) acc += w * f.derivative_at_log(k, t);
          return acc.value();
        },
        order);
  }
  return combo.with_centers(std::move(centers)).with_breakpoints(std::move(breaks));
}

}  // namespace mellin
