#pragma once

#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "mellin/profile.hpp"

namespace mellin {

/// Discretisation of integrals over (0, inf) with respect to dx/x, carried
/// out in log coordinate on a finite window.
struct QuadratureSpec {
  double half_width = 40.0;   // T: window is [c - T, c + T] per profile centre
  double tolerance = 1e-9;    // |T_2n - T_n| <= tolerance * max(1, |T_2n|)
  int max_refinements = 20;   // interval halvings before giving up

  /// Throws Error(InvalidArgument) on non-positive fields.
  void validate() const;
};

struct Interval {
  double lo;
  double hi;
};

/// Hull of [c - T, c + T] over the centres of the given profiles; [-T, T]
/// when none of them declares a centre.
Interval quadrature_window(std::initializer_list<const MellinProfile*> profiles,
                           const QuadratureSpec& quad);

/// Trapezoid rule with global interval halving, run separately on each piece
/// of `window` between consecutive breakpoints. Breakpoint ends are sampled
/// one ulp inside the piece so jump discontinuities integrate exactly.
///
/// Throws Error(QuadratureFailure) if a piece has not converged after
/// quad.max_refinements halvings.
double integrate(const std::function<double(double)>& integrand, Interval window,
                 std::span<const double> breakpoints, const QuadratureSpec& quad);

/// ||f||_{X^p} = ||f(x) x^{-1/p}||_{L^p(R+)}, which equals the L^p(R) norm of
/// the log profile. For p = inf the sup over a uniform 4001-point grid on the
/// window is returned, so it can only under-estimate.
double xp_norm(const MellinProfile& f, double p, const QuadratureSpec& quad);

/// Number of points in the p = inf sup grid.
inline constexpr int kSupGridPoints = 4001;

/// True when 1/p + 1/q = 1 (with 1/inf = 0).
bool are_conjugate(double p, double q) noexcept;

double conjugate_index(double p) noexcept;

/// <f, g> = int_0^inf f(x) g(x) dx/x, computed as int h_f(u) h_g(u) du.
/// Throws Error(NonConjugateIndices) unless the declared indices are
/// Hoelder conjugate, Error(QuadratureFailure) on non-convergence.
double mellin_inner(const MellinProfile& f, const MellinProfile& g,
                    const QuadratureSpec& quad);

}  // namespace mellin
