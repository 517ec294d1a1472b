#include "mellin/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "mellin/compensated_sum.hpp"
#include "mellin/error.hpp"

namespace mellin {

void QuadratureSpec::validate() const {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw Error(ErrorKind::InvalidArgument, "quadrature half_width must be positive");
  }
  if (!(tolerance > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "quadrature tolerance must be positive");
  }
  if (max_refinements < 1) {
    throw Error(ErrorKind::InvalidArgument, "quadrature max_refinements must be >= 1");
  }
}

Interval quadrature_window(std::initializer_list<const MellinProfile*> profiles,
                           const QuadratureSpec& quad) {
  bool any = false;
  Interval w{0.0, 0.0};
  for (const MellinProfile* f : profiles) {
    for (double c : f->centers()) {
      if (!any) {
        w = {c - quad.half_width, c + quad.half_width};
        any = true;
      } else {
        w.lo = std::min(w.lo, c - quad.half_width);
        w.hi = std::max(w.hi, c + quad.half_width);
      }
    }
  }
  if (!any) w = {-quad.half_width, quad.half_width};
  return w;
}

namespace {

double integrate_piece(const std::function<double(double)>& integrand, double a,
                       double b, bool open_left, bool open_right, double tol,
                       const QuadratureSpec& quad) {
  const double len = b - a;
  if (!(len > 0.0)) return 0.0;
  const double left = open_left ? std::nextafter(a, b) : a;
  const double right = open_right ? std::nextafter(b, a) : b;

  long panels = std::max(8L, static_cast<long>(std::ceil(len / 0.5)));
  double h = len / static_cast<double>(panels);

  CompensatedSum interior;
  for (long i = 1; i < panels; ++i) interior += integrand(a + h * static_cast<double>(i));
  const double ends = 0.5 * (integrand(left) + integrand(right));
  double sum = ends + interior.value();  // trapezoid / h
  double estimate = h * sum;

  for (int level = 1; level <= quad.max_refinements; ++level) {
    CompensatedSum mids;
    for (long i = 0; i < panels; ++i) {
      mids += integrand(a + h * (static_cast<double>(i) + 0.5));
    }
    sum += mids.value();
    panels *= 2;
    h *= 0.5;
    const double refined = h * sum;
    const double change = std::fabs(refined - estimate);
    estimate = refined;
    if (level >= 2 && change <= tol * std::max(1.0, std::fabs(refined))) {
      return refined;
    }
  }
  std::ostringstream msg;
  msg << "quadrature did not reach tolerance " << quad.tolerance << " on [" << a
      << ", " << b << "] within " << quad.max_refinements << " refinements";
  throw Error(ErrorKind::QuadratureFailure, msg.str());
}

}  // namespace

double integrate(const std::function<double(double)>& integrand, Interval window,
                 std::span<const double> breakpoints, const QuadratureSpec& quad) {
  quad.validate();
  if (!(window.hi > window.lo)) return 0.0;
  std::vector<double> cuts{window.lo};
  std::vector<double> inner(breakpoints.begin(), breakpoints.end());
  std::sort(inner.begin(), inner.end());
  for (double b : inner) {
    if (b > cuts.back() && b < window.hi) cuts.push_back(b);
  }
  cuts.push_back(window.hi);

  const double total = window.hi - window.lo;
  CompensatedSum acc;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    const double share = quad.tolerance * (b - a) / total;
    acc += integrate_piece(integrand, a, b, i > 0, i + 2 < cuts.size(), share, quad);
  }
  return acc.value();
}

double xp_norm(const MellinProfile& f, double p, const QuadratureSpec& quad) {
  quad.validate();
  if (!(p >= 1.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "xp_norm: p must lie in [1, inf], got " + std::to_string(p));
  }
  const Interval window = quadrature_window({&f}, quad);
  if (std::isinf(p)) {
    double sup = 0.0;
    const double step = (window.hi - window.lo) / (kSupGridPoints - 1);
    for (int i = 0; i < kSupGridPoints; ++i) {
      sup = std::max(sup, std::fabs(f.at_log(window.lo + step * i)));
    }
    return sup;
  }
  const auto breaks = f.breakpoints();
  const double integral = integrate(
      [&f, p](double t) { return std::pow(std::fabs(f.at_log(t)), p); }, window,
      breaks, quad);
  return std::pow(integral, 1.0 / p);
}

bool are_conjugate(double p, double q) noexcept {
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
  return std::fabs(inv_p + inv_q - 1.0) <= 1e-12;
}

double conjugate_index(double p) noexcept {
  if (std::isinf(p)) return 1.0;
  if (p == 1.0) return kInfinity;
  return p / (p - 1.0);
}

double mellin_inner(const MellinProfile& f, const MellinProfile& g,
                    const QuadratureSpec& quad) {
  if (!are_conjugate(f.lebesgue_index(), g.lebesgue_index())) {
    std::ostringstream msg;
    msg << "mellin_inner: indices p=" << f.lebesgue_index()
        << " and q=" << g.lebesgue_index() << " are not Hoelder conjugate";
    throw Error(ErrorKind::NonConjugateIndices, msg.str());
  }
  const Interval window = quadrature_window({&f, &g}, quad);
  std::vector<double> breaks = f.breakpoints();
  const auto gb = g.breakpoints();
  breaks.insert(breaks.end(), gb.begin(), gb.end());
  return integrate([&f, &g](double u) { return f.at_log(u) * g.at_log(u); }, window,
                   breaks, quad);
}

}  // namespace mellin
