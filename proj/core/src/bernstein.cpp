#include "mellin/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

#include "mellin/error.hpp"
#include "mellin/sinc.hpp"

namespace mellin {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_sigma(double sigma, const char* who) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    std::ostringstream msg;
    msg << who << ": sigma must be positive, got " << sigma;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
}

// d^n/dt^n sinc(a t)^2 by Leibniz.
double fejer_derivative(double a, int n, double t) {
  const double u = a * t;
  double acc = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * (n - k + 1) / k;
    acc += binom * sinc_derivative_exact(u, k) * sinc_derivative_exact(u, n - k);
  }
  return std::pow(a, n) * acc;
}

}  // namespace

MellinProfile make_fejer(double sigma, double lebesgue_index) {
  require_positive_sigma(sigma, "make_fejer");
  const double a = sigma / (2.0 * kPi);
  MellinProfile f(
      [a](double t) {
        const double s = sinc(a * t);
        return s * s;
      },
      sigma, lebesgue_index);
  return f.with_derivative_function([a](int n, double t) { return fejer_derivative(a, n, t); })
      .with_centers({0.0});
}

MellinProfile make_wave(double sigma) {
  require_positive_sigma(sigma, "make_wave");
  MellinProfile f([sigma](double t) { return std::sin(sigma * t); }, sigma, kInfinity);
  return f.with_derivative_function([sigma](int n, double t) {
    // sin^(n)(y) = sin(y + n pi/2)
    const double y = sigma * t;
    double d = 0.0;
    switch (n % 4) {
      case 0: d = std::sin(y); break;
      case 1: d = std::cos(y); break;
      case 2: d = -std::sin(y); break;
      default: d = -std::cos(y); break;
    }
    return std::pow(sigma, n) * d;
  });
}

MellinProfile make_cardinal(double sigma, double lebesgue_index) {
  require_positive_sigma(sigma, "make_cardinal");
  const double a = sigma / kPi;
  MellinProfile f([a](double t) { return sinc(a * t); }, sigma, lebesgue_index);
  return f.with_derivative_function([a](int n, double t) {
            return std::pow(a, n) * sinc_derivative_exact(a * t, n);
          })
      .with_centers({0.0});
}

MellinProfile make_constant(double value, double sigma) {
  require_positive_sigma(sigma, "make_constant");
  MellinProfile f([value](double) { return value; }, sigma, kInfinity);
  return f.with_derivative_function([](int, double) { return 0.0; });
}

MellinProfile make_shifted(double sigma, double shift, double lebesgue_index) {
  return mellin_translate(make_fejer(sigma, lebesgue_index), shift);
}

MellinProfile make_combo(double sigma, const std::vector<double>& weights,
                         const std::vector<double>& shifts, double lebesgue_index) {
  if (weights.empty() || weights.size() != shifts.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "make_combo: weights and shifts must be non-empty and equally long");
  }
  const MellinProfile base = make_fejer(sigma, lebesgue_index);
  std::vector<std::pair<double, MellinProfile>> terms;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    terms.emplace_back(weights[i], mellin_translate(base, shifts[i]));
  }
  return linear_combination(terms);
}

bool BernsteinRadiusReport::is_member() const noexcept {
  return radius_estimate <= (1.0 + kMembershipSlack) * base_norm;
}

BernsteinRadiusReport bernstein_radius(const MellinProfile& f, double sigma,
                                       int max_order, const QuadratureSpec& quad,
                                       std::optional<double> p) {
  require_positive_sigma(sigma, "bernstein_radius");
  if (max_order < 1) {
    throw Error(ErrorKind::InvalidArgument, "bernstein_radius: max_order must be >= 1");
  }
  if (f.analytic_order() < max_order) {
    throw Error(ErrorKind::DerivativeUnavailable,
                "bernstein_radius: Theta^" + std::to_string(max_order) +
                    " needs analytic derivatives, profile provides " +
                    std::to_string(std::max(0, f.analytic_order())));
  }
  BernsteinRadiusReport report;
  report.sigma = sigma;
  report.max_order_probed = max_order;
  report.lebesgue_index = p.value_or(f.lebesgue_index());
  report.base_norm = xp_norm(f, report.lebesgue_index, quad);
  double scale = 1.0;
  for (int k = 1; k <= max_order; ++k) {
    scale /= sigma;
    const double ratio = scale * xp_norm(apply_theta(f, k), report.lebesgue_index, quad);
    report.ratios.push_back(ratio);
  }
  report.radius_estimate = *std::max_element(report.ratios.begin(), report.ratios.end());
  return report;
}

PairedFunction::PairedFunction(PairingKind kind, MellinProfile source,
                               MellinProfile test, QuadratureSpec quad)
    : kind_(kind), source_(std::move(source)), test_(std::move(test)), quad_(quad) {
  quad_.validate();
  if (!are_conjugate(source_.lebesgue_index(), test_.lebesgue_index())) {
    std::ostringstream msg;
    msg << "pairing needs conjugate indices, got p=" << source_.lebesgue_index()
        << ", q=" << test_.lebesgue_index();
    throw Error(ErrorKind::NonConjugateIndices, msg.str());
  }
  if (kind_ == PairingKind::Psi && !source_.can_differentiate(1)) {
    throw Error(ErrorKind::DerivativeUnavailable,
                "pair_psi: Theta f is not computable for the source profile");
  }
}

double PairedFunction::operator()(double t) const {
  return kind_ == PairingKind::Phi ? phi(t) : psi(t);
}

double PairedFunction::phi(double t) const {
  return mellin_inner(mellin_translate(source_, t), test_, quad_);
}

double PairedFunction::psi(double t) const {
  if (t == 0.0) return mellin_inner(apply_theta(source_, 1), test_, quad_);

  const MellinProfile shifted = mellin_translate(source_, t);
  const Interval window = quadrature_window({&source_, &shifted, &test_}, quad_);
  std::vector<double> breaks = source_.breakpoints();
  for (double b : shifted.breakpoints()) breaks.push_back(b);
  for (double b : test_.breakpoints()) breaks.push_back(b);

  const MellinProfile& f = source_;
  const MellinProfile& g = test_;
  if (std::fabs(t) < 1e-4 && f.analytic_order() >= 3) {
    // Taylor form of the quotient; avoids cancellation in h(u+t) - h(u).
    return integrate(
        [&f, &g, t](double u) {
          const double q = f.derivative_at_log(1, u) +
                           t * (0.5 * f.derivative_at_log(2, u) +
                                t * f.derivative_at_log(3, u) / 6.0);
          return q * g.at_log(u);
        },
        window, breaks, quad_);
  }
  return integrate(
      [&f, &g, t](double u) {
        return (f.at_log(u + t) - f.at_log(u)) / t * g.at_log(u);
      },
      window, breaks, quad_);
}

PairedFunction pair_phi(const MellinProfile& f, const MellinProfile& g,
                        const QuadratureSpec& quad) {
  return PairedFunction(PairingKind::Phi, f, g, quad);
}

PairedFunction pair_psi(const MellinProfile& f, const MellinProfile& g,
                        const QuadratureSpec& quad) {
  return PairedFunction(PairingKind::Psi, f, g, quad);
}

}  // namespace mellin
