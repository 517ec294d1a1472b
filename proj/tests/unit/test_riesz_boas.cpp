#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "mellin/bernstein.hpp"
#include "mellin/error.hpp"
#include "mellin/profile.hpp"
#include "mellin/riesz_boas.hpp"
#include "oracles.hpp"

using namespace mellin;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected mellin::Error");
  return ErrorKind::InvalidArgument;
}

// sinc^(n)(u) = int_0^1 (pi s)^n cos(pi u s + n pi/2) ds, by Simpson in long double.
double sinc_derivative_oracle(double u, int n) {
  const long steps = 20000;
  const long double pi = oracle::pi;
  auto integrand = [&](long double s) {
    return std::pow(pi * s, static_cast<long double>(n)) * std::cos(pi * u * s + n * pi / 2);
  };
  const long double h = 1.0L / steps;
  long double sum = integrand(0.0L) + integrand(1.0L);
  for (long i = 1; i < steps; ++i) sum += integrand(i * h) * ((i % 2) ? 4.0L : 2.0L);
  return static_cast<double>(sum * h / 3.0L);
}

double sign(long k) { return (k % 2 == 0) ? -1.0 : 1.0; }  // (-1)^{k+1}

std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> xs;
  for (int i = 0; i < count; ++i) xs.push_back(std::exp(lo + (hi - lo) * i / (count - 1)));
  return xs;
}

double max_theta_error(const MellinProfile& f, int r, long N, const std::vector<double>& xs) {
  const RieszBoasCoeffs c = build_coeffs(r, f.band_limit(), N);
  const MellinProfile truth = apply_theta(f, r);
  double worst = 0.0;
  for (double x : xs) worst = std::max(worst, std::fabs(boas_apply(f, c, x) - truth(x)));
  return worst;
}

double slope(const std::vector<long>& ns, const std::vector<double>& errors) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double x = std::log(static_cast<double>(ns[i]));
    const double y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_SUITE("riesz_boas") {

TEST_CASE("coeff_A examples") {
  CHECK(coeff_A(1, 1) == doctest::Approx(4.0 / oracle::pi).epsilon(1e-14));
  CHECK(std::fabs(coeff_A(1, 1) - 1.2732395) <= 1e-7);
  for (long k = -3; k <= 4; ++k) {
    const double d = k - 0.5;
    CHECK(coeff_A(1, k) == doctest::Approx(1.0 / (oracle::pi * d * d)).epsilon(1e-14));
    CHECK(std::fabs(coeff_A(1, k) - sign(k) * sinc_derivative_oracle(0.5 - k, 1)) <= 1e-7);
  }
  CHECK(std::fabs(coeff_A(2, 1) - sinc_derivative_oracle(-0.5, 3)) <= 1e-6);
  CHECK(kind_of([] { coeff_A(0, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("coeff_B examples") {
  CHECK(coeff_B(1, 0) == doctest::Approx(oracle::pi * oracle::pi / 3).epsilon(1e-14));
  CHECK(std::fabs(coeff_B(1, 0) - 3.2898681) <= 1e-7);
  CHECK(coeff_B(1, 1) == doctest::Approx(2.0).epsilon(1e-14));
  for (long k = 1; k <= 6; ++k) {
    CHECK(coeff_B(1, k) == doctest::Approx(2.0 / static_cast<double>(k * k)).epsilon(1e-14));
    CHECK(std::fabs(coeff_B(1, k) - sign(k) * sinc_derivative_oracle(-static_cast<double>(k), 2)) <=
          1e-7);
  }
  CHECK(kind_of([] { coeff_B(0, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("coefficients agree with the sinc derivative oracle") {
  for (int m = 1; m <= 3; ++m) {
    for (long k = -8; k <= 8; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      CHECK(std::fabs(coeff_A(m, k) - sign(k) * sinc_derivative_oracle(0.5 - k, 2 * m - 1)) <=
            1e-6);
      CHECK(std::fabs(coeff_B(m, k) - sign(k) * sinc_derivative_oracle(-static_cast<double>(k), 2 * m)) <=
            1e-6);
    }
  }
}

TEST_CASE("coefficient symmetry") {
  for (int m = 1; m <= 4; ++m) {
    for (long k = -20; k <= 20; ++k) {
      CHECK(coeff_A(m, k) == doctest::Approx(coeff_A(m, 1 - k)).epsilon(1e-14));
      CHECK(coeff_B(m, k) == doctest::Approx(coeff_B(m, -k)).epsilon(1e-14));
    }
  }
}

TEST_CASE("build_coeffs sum identities") {
  const double pi = oracle::pi;
  const RieszBoasCoeffs a = build_coeffs(1, pi, 100000);
  CHECK(std::fabs(a.abs_partial_sum - pi) <= 1e-4);
  CHECK(a.abs_partial_sum <= pi);
  CHECK(a.abs_partial_sum + a.tail_bound >= pi);
  const RieszBoasCoeffs b = build_coeffs(2, pi, 100000);
  CHECK(std::fabs(b.abs_partial_sum - pi * pi) <= 1e-3);
  CHECK(b.abs_partial_sum + b.tail_bound >= pi * pi);
  for (int m = 2; m <= 3; ++m) {
    const RieszBoasCoeffs odd = build_coeffs(2 * m - 1, pi, 100000);
    CHECK(std::fabs(odd.abs_partial_sum / std::pow(pi, 2 * m - 1) - 1) <= 1e-3);
    const RieszBoasCoeffs even = build_coeffs(2 * m, pi, 100000);
    CHECK(std::fabs(even.abs_partial_sum / std::pow(pi, 2 * m) - 1) <= 1e-3);
  }
}

TEST_CASE("abs_partial_sum is non-decreasing in N") {
  for (int r = 1; r <= 4; ++r) {
    double previous = 0.0;
    for (long N : {1L, 2L, 5L, 16L, 100L, 1000L, 5000L}) {
      const RieszBoasCoeffs c = build_coeffs(r, 2.0, N);
      CHECK(c.abs_partial_sum >= previous);
      CHECK(c.table.size() == static_cast<std::size_t>(2 * N + 1));
      previous = c.abs_partial_sum;
    }
  }
}

TEST_CASE("build_coeffs errors") {
  CHECK(kind_of([] { build_coeffs(0, 1.0, 10); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { build_coeffs(1, 0.0, 10); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { build_coeffs(1, 1.0, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("boas_apply examples") {
  const double sigma = oracle::pi;
  const RieszBoasCoeffs c1 = build_coeffs(1, sigma, 10000);
  CHECK(std::fabs(boas_apply(make_wave(sigma), c1, 1.0) - sigma) <= 1e-4 * sigma);
  CHECK(std::fabs(boas_apply(make_constant(2.5, sigma), c1, 1.7)) <= 2.5 * c1.tail_bound);

  const MellinProfile fejer = make_fejer(sigma);
  const RieszBoasCoeffs c2 = build_coeffs(2, sigma, 4096);
  const double x = std::exp(0.3);
  CHECK(std::fabs(boas_apply(fejer, c2, x) - apply_theta(fejer, 2)(x)) <= 1e-4);

  CHECK(kind_of([&] { boas_apply(fejer, c2, 0.0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { boas_apply(fejer, c2, -1.0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("boas_evaluate flags out-of-class inputs") {
  const RieszBoasCoeffs c = build_coeffs(1, 2.0, 512);
  const BoasEvaluation in = boas_evaluate(make_fejer(2.0), c, 1.3, 1.0);
  CHECK(in.in_class);
  CHECK(in.value == boas_apply(make_fejer(2.0), c, 1.3));
  CHECK(in.truncation_bound == doctest::Approx(c.scale() * c.tail_bound));
  const BoasEvaluation out = boas_evaluate(make_fejer(3.0), c, 1.3, 1.0);
  CHECK_FALSE(out.in_class);
}

TEST_CASE("boas_apply matches Theta^r on Fejer") {
  const std::vector<double> xs = log_grid(-1.0, 1.0, 21);
  for (int r = 1; r <= 4; ++r) {
    CAPTURE(r);
    CHECK(max_theta_error(make_fejer(oracle::pi), r, 4096, xs) <= 5e-3);
  }
}

TEST_CASE("truncation error decays at least like N^-2") {
  const std::vector<double> xs = log_grid(-1.0, 1.0, 21);
  const std::vector<long> ns{256, 512, 1024, 2048, 4096, 8192};
  for (int r = 1; r <= 2; ++r) {
    std::vector<double> fejer_errors;
    std::vector<double> cardinal_errors;
    for (long N : ns) {
      fejer_errors.push_back(max_theta_error(make_fejer(oracle::pi), r, N, xs));
      cardinal_errors.push_back(max_theta_error(make_cardinal(oracle::pi), r, N, xs));
    }
    CAPTURE(r);
    const double s_fejer = slope(ns, fejer_errors);
    const double s_cardinal = slope(ns, cardinal_errors);
    CAPTURE(s_fejer);
    CAPTURE(s_cardinal);
    // O(N^-2) is an upper bound; both profiles decay fast enough to give N^-3
    CHECK(s_fejer <= -1.5);
    CHECK(s_cardinal <= -1.5);
  }
}

TEST_CASE("norm bound") {
  const std::vector<double> xs = log_grid(-2.0, 2.0, 41);
  const double sigma = oracle::pi;
  for (const MellinProfile& f : {make_fejer(sigma), make_wave(sigma)}) {
    for (int r = 1; r <= 4; ++r) {
      const RieszBoasCoeffs c = build_coeffs(r, sigma, 2048);
      const double bound = std::pow(sigma, r) * (1.0 + c.tail_bound / std::pow(sigma, r));
      for (double x : xs) CHECK(std::fabs(boas_apply(f, c, x)) <= bound);
    }
  }
}

TEST_CASE("classical Boas formula in the log coordinate") {
  const double sigma = 2.3;
  const long N = 2000;
  const RieszBoasCoeffs c = build_coeffs(1, sigma, N);
  auto h = [sigma](double t) { return std::sin(sigma * t); };
  for (double t : {-1.1, 0.0, 0.4, 2.5}) {
    long double sum = 0.0L;
    for (long k = -N; k <= N; ++k) {
      const double d = k - 0.5;
      sum += sign(k) / (d * d) * h(t + oracle::pi * d / sigma);
    }
    const double classical = static_cast<double>(sigma / (oracle::pi * oracle::pi) * sum);
    CHECK(std::fabs(boas_apply(make_wave(sigma), c, std::exp(t)) - classical) <= 1e-6);
  }
}

TEST_CASE("boas_power_apply examples") {
  const double sigma = oracle::pi;
  const MellinProfile fejer = make_fejer(sigma);
  const RieszBoasCoeffs c = build_coeffs(1, sigma, 300);
  for (double x : {0.5, 1.0, 2.2}) CHECK(boas_power_apply(fejer, sigma, 1, 300, x) == boas_apply(fejer, c, x));

  const MellinProfile wave = make_wave(sigma);
  const double tol = 1e-3 * sigma * sigma;
  CHECK(std::fabs(boas_power_apply(wave, sigma, 2, 2048, 1.0)) <= tol);
  CHECK(std::fabs(boas_power_apply(wave, sigma, 2, 2048, std::exp(oracle::pi / (2 * sigma))) +
                  sigma * sigma) <= tol);
}

TEST_CASE("sigma independence") {
  const double pi = oracle::pi;
  const MellinProfile f = make_fejer(pi);
  const std::vector<double> grid = log_grid(-1.0, 1.0, 21);

  const SigmaIndependenceReport ok = sigma_independence_check(f, 1, pi, 1.5 * pi, 4096, grid);
  CHECK(ok.preconditions_met);
  CHECK(ok.max_deviation <= 1e-3);
  CHECK(ok.agrees(1e-3));

  const SigmaIndependenceReport same = sigma_independence_check(f, 1, pi, pi, 512, grid);
  CHECK(same.max_deviation == 0.0);

  const SigmaIndependenceReport under = sigma_independence_check(f, 1, pi, pi / 2, 4096, grid);
  CHECK_FALSE(under.preconditions_met);
  CHECK_FALSE(under.agrees(1.0));
  double theta_sup = 0.0;
  const MellinProfile df = apply_theta(f, 1);
  for (int i = 0; i <= 2000; ++i) theta_sup = std::max(theta_sup, std::fabs(df.at_log(-5.0 + i / 200.0)));
  CHECK(under.max_deviation >= 0.1 * theta_sup);

  const std::vector<double> bad_grid{1.0, 0.0};
  CHECK(kind_of([&] { sigma_independence_check(f, 1, pi, pi, 16, bad_grid); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { sigma_independence_check(f, 1, -1.0, pi, 16, grid); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("riesz_boas_profile evaluates lazily") {
  const MellinProfile f = make_fejer(2.0);
  const RieszBoasCoeffs c = build_coeffs(1, 2.0, 200);
  const MellinProfile rf = riesz_boas_profile(f, c);
  CHECK(rf.band_limit() == f.band_limit());
  for (double x : {0.3, 1.0, 4.0}) CHECK(rf(x) == boas_apply(f, c, x));
}

}
