#pragma once

#include <optional>
#include <vector>

#include "mellin/profile.hpp"
#include "mellin/quadrature.hpp"

namespace mellin {

// Test functions of Mellin exponential type sigma. Each carries closed-form
// log derivatives of every order.

/// Fejer profile h(t) = sinc^2(sigma t / (2 pi)): exponential type exactly
/// sigma, member of X^p for every p. `lebesgue_index` is the declared index
/// used for Hoelder pairing checks. Throws Error(InvalidArgument) for
/// sigma <= 0.
MellinProfile make_fejer(double sigma, double lebesgue_index = 2.0);

/// f(x) = sin(sigma ln x); bounded but not integrable, so declared p = inf.
MellinProfile make_wave(double sigma);

/// Cardinal profile h(t) = sinc(sigma t / pi): type sigma, in X^p for p > 1,
/// decays only like 1/|t|.
MellinProfile make_cardinal(double sigma, double lebesgue_index = 2.0);

/// f = value everywhere; Theta f = 0, so it lies in the sigma-Bernstein
/// space for every sigma (as an X^inf function).
MellinProfile make_constant(double value, double sigma);

/// Fejer profile translated by `shift` in log coordinate: f(e^shift x).
MellinProfile make_shifted(double sigma, double shift, double lebesgue_index = 2.0);

/// sum_i weights[i] * fejer(sigma) translated by shifts[i].
MellinProfile make_combo(double sigma, const std::vector<double>& weights,
                         const std::vector<double>& shifts,
                         double lebesgue_index = 2.0);

struct BernsteinRadiusReport {
  double sigma = 0.0;
  int max_order_probed = 0;
  double lebesgue_index = 0.0;
  double base_norm = 0.0;          // ||f||_{X^p}
  std::vector<double> ratios;      // sigma^-k ||Theta^k f||_{X^p}, k = 1..K
  double radius_estimate = 0.0;    // max(ratios)

  /// Numerical membership in the sigma-Bernstein space: every probed ratio
  /// stays within (1 + 1e-6) of ||f||. For normalised f this is
  /// radius_estimate <= 1 + 1e-6.
  bool is_member() const noexcept;
};

inline constexpr double kMembershipSlack = 1e-6;

/// Probes sigma^-k ||Theta^k f||_{X^p} for k = 1..max_order, p defaulting to
/// the profile's declared index. Requires analytic derivatives up to
/// max_order; throws Error(DerivativeUnavailable) otherwise.
BernsteinRadiusReport bernstein_radius(const MellinProfile& f, double sigma,
                                       int max_order, const QuadratureSpec& quad,
                                       std::optional<double> p = std::nullopt);

enum class PairingKind { Phi, Psi };

/// t -> Phi(t) = int f(e^t x) g(x) dx/x, or its difference quotient
/// Psi(t) = (Phi(t) - Phi(0)) / t with Psi(0) = int Theta f g dx/x.
///
/// Every evaluation runs one quadrature. Reentrant.
class PairedFunction {
 public:
  PairedFunction(PairingKind kind, MellinProfile source, MellinProfile test,
                 QuadratureSpec quad);

  double operator()(double t) const;

  PairingKind kind() const noexcept { return kind_; }
  const MellinProfile& source() const noexcept { return source_; }
  const MellinProfile& test() const noexcept { return test_; }
  const QuadratureSpec& quadrature() const noexcept { return quad_; }

 private:
  double phi(double t) const;
  double psi(double t) const;

  PairingKind kind_;
  MellinProfile source_;
  MellinProfile test_;
  QuadratureSpec quad_;
};

/// Throws Error(NonConjugateIndices) unless f and g have conjugate indices.
PairedFunction pair_phi(const MellinProfile& f, const MellinProfile& g,
                        const QuadratureSpec& quad);

/// As pair_phi; additionally requires Theta f to be computable.
PairedFunction pair_psi(const MellinProfile& f, const MellinProfile& g,
                        const QuadratureSpec& quad);

}  // namespace mellin
