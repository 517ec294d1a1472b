#pragma once

namespace mellin {

/// sin(pi*u) with exact zeros at the integers. The argument is reduced
/// modulo 2 before multiplying by pi, which also keeps large arguments
/// accurate.
double sin_pi(double u) noexcept;

/// cos(pi*u) with exact zeros at the half-integers.
double cos_pi(double u) noexcept;

/// Normalized cardinal sine sin(pi*u)/(pi*u), with sinc(0) = 1.
///
/// Uses a degree-8 Taylor polynomial for |u| < 1e-4.
double sinc(double u) noexcept;

/// sinc(v - k) given a precomputed sin_pi(v). Cardinal series evaluate many
/// shifts of one argument; sin(pi(v - k)) = (-1)^k sin(pi v) saves a trig
/// call per term.
double sinc_shifted(double v, long k, double sin_pi_v) noexcept;

/// Highest derivative order accepted by sinc_derivative().
inline constexpr int kMaxSincDerivativeOrder = 12;

/// Derivative of sinc of the given order, by central finite differences with
/// Richardson (Ridders) extrapolation in extended precision.
///
/// This is deliberately a *numerical* route: it is the independent oracle the
/// closed-form Riesz-Boas coefficients are checked against. Relative error is
/// below 1e-8 for |u| <= 100 and order <= 6.
///
/// Throws Error(IndexOutOfRange) unless 1 <= order <= 12.
double sinc_derivative(double u, int order);

/// Closed-form derivative of sinc of any order >= 0. Switches to the Maclaurin
/// series of sin(x)/x near the origin where the Leibniz expansion cancels.
double sinc_derivative_exact(double u, int order);

}  // namespace mellin
