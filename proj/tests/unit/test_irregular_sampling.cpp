#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mellin/bernstein.hpp"
#include "mellin/error.hpp"
#include "mellin/irregular_sampling.hpp"
#include "mellin/quadrature.hpp"
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

std::vector<double> nodes_from(long M, const std::function<double(long)>& offset) {
  std::vector<double> raw;
  for (long k = -M; k <= M; ++k) raw.push_back(static_cast<double>(k) + offset(k));
  return raw;
}

std::vector<double> sine_perturbed(long M) {
  return nodes_from(M, [](long k) { return std::sin(static_cast<double>(k)) / 8.0; });
}

}  // namespace

TEST_SUITE("irregular_sampling") {

TEST_CASE("validate_nodes examples") {
  const NodeSequence ints = validate_nodes(nodes_from(10, [](long) { return 0.0; }));
  CHECK(ints.deviation() == 0.0);
  CHECK(ints.half_count() == 10);

  try {
    validate_nodes(nodes_from(10, [](long) { return 0.3; }));
    FAIL("accepted deviation 0.3");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DeviationTooLarge);
    CHECK(std::string(e.what()).find("1/4") != std::string::npos);
  }

  const NodeSequence sine = validate_nodes(sine_perturbed(50));
  CHECK(sine.deviation() <= 0.125);
  CHECK(sine.deviation() > 0.12);
}

TEST_CASE("validate_nodes structural errors") {
  const std::vector<double> even{-0.5, 0.5};
  CHECK(kind_of([&] { validate_nodes(even); }) == ErrorKind::LengthMismatch);
  const std::vector<double> empty;
  CHECK(kind_of([&] { validate_nodes(empty); }) == ErrorKind::LengthMismatch);
  const std::vector<double> backwards{-1.0, 0.2, 0.1};
  CHECK(kind_of([&] { validate_nodes(backwards); }) == ErrorKind::NonMonotone);
  const std::vector<double> exactly_quarter{-1.0, 0.25, 1.0};
  CHECK(kind_of([&] { validate_nodes(exactly_quarter); }) == ErrorKind::DeviationTooLarge);
}

TEST_CASE("rejection completeness on random sequences") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> small(-0.2499, 0.2499);
  std::uniform_int_distribution<long> length(1, 60);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    const long M = length(rng);
    std::vector<double> good = nodes_from(M, [&](long) { return small(rng); });
    CHECK_NOTHROW(validate_nodes(good));

    std::vector<double> bad = nodes_from(M, [&](long) { return small(rng) * 0.8; });
    std::uniform_int_distribution<long> pick(0, 2 * M);
    const std::size_t i = static_cast<std::size_t>(pick(rng));
    const double deviation = 0.25 + 0.05 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    bad[i] = static_cast<double>(static_cast<long>(i) - M) + (coin(rng) ? deviation : -deviation);
    CHECK(kind_of([&] { validate_nodes(bad); }) == ErrorKind::DeviationTooLarge);
  }
}

TEST_CASE("higgins_G examples") {
  const HigginsKernel ints(integer_nodes(2000), 2000);
  CHECK(higgins_G(ints, 0.5) == doctest::Approx(1.0 / oracle::pi).epsilon(1e-6));
  CHECK(std::fabs(higgins_G(ints, 0.5) - 0.3183099) <= 1e-6);

  const HigginsKernel pert(validate_nodes(sine_perturbed(40)), 40);
  for (long j = -40; j <= 40; j += 5) CHECK(higgins_G(pert, pert.node(j)) == 0.0);

  // symmetric nodes t_{-k} = -t_k with t_0 = 0 give an odd G
  const HigginsKernel sym(validate_nodes(nodes_from(30, [](long k) {
                            return 0.1 * std::sin(static_cast<double>(k));
                          })),
                          30);
  for (double z : {0.3, 1.7, 4.25, 9.9}) {
    CHECK(higgins_G(sym, -z) == doctest::Approx(-higgins_G(sym, z)).epsilon(1e-14));
  }
}

TEST_CASE("higgins_G_prime examples") {
  const HigginsKernel ints(integer_nodes(2000), 2000);
  CHECK(higgins_G_prime(ints, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::fabs(higgins_G_prime(ints, 3) + 1.0) <= 1e-5);

  const HigginsKernel pert(validate_nodes(sine_perturbed(60)), 60);
  for (long j = -60; j < 60; ++j) {
    const double a = higgins_G_prime(pert, j);
    const double b = higgins_G_prime(pert, j + 1);
    CHECK(std::isfinite(a));
    CHECK(a != 0.0);
    CHECK((a > 0) != (b > 0));
  }
  CHECK(kind_of([&] { higgins_G_prime(pert, 61); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { HigginsKernel(integer_nodes(5), 6); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { HigginsKernel(integer_nodes(5), 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("G' is the derivative of G at the nodes") {
  const HigginsKernel pert(validate_nodes(sine_perturbed(80)), 80);
  for (long j : {-7L, -1L, 0L, 2L, 11L}) {
    const double tj = pert.node(j);
    const double h = 1e-4;
    const double fd = (higgins_G(pert, tj + h) - higgins_G(pert, tj - h)) / (2 * h);
    CHECK(higgins_G_prime(pert, j) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("Shannon reduction at integer nodes") {
  const HigginsKernel ints(integer_nodes(2000), 2000);
  double worst = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double z = -5.0 + 10.0 * i / 400;
    worst = std::max(worst, std::fabs(higgins_G(ints, z) - std::sin(oracle::pi * z) / oracle::pi));
  }
  CHECK(worst <= 1e-5);
  for (long k = -5; k <= 5; ++k) {
    CHECK(std::fabs(higgins_G_prime(ints, k) - ((k % 2) ? -1.0 : 1.0)) <= 1e-4);
  }
}

TEST_CASE("cardinal_reconstruct examples") {
  const long K = 1024;
  const HigginsKernel ints(integer_nodes(K), K);
  auto h = [](double t) { return oracle::sinc(t / 2) * oracle::sinc(t / 2); };
  std::vector<double> samples;
  for (long k = -K; k <= K; ++k) samples.push_back(h(static_cast<double>(k)));
  double worst = 0.0;
  for (int i = 0; i <= 120; ++i) {
    const double t = -3.0 + 6.0 * i / 120;
    worst = std::max(worst, std::fabs(cardinal_reconstruct(ints, samples, t) - h(t)));
  }
  CHECK(worst <= 1e-4);

  for (long j : {-K, -3L, 0L, 17L, K}) {
    CHECK(cardinal_reconstruct(ints, samples, ints.node(j)) ==
          samples[static_cast<std::size_t>(j + K)]);
  }

  const std::vector<double> zeros(static_cast<std::size_t>(2 * K + 1), 0.0);
  CHECK(cardinal_reconstruct(ints, zeros, 0.37) == 0.0);
  const std::vector<double> short_samples(5, 1.0);
  CHECK(kind_of([&] { cardinal_reconstruct(ints, short_samples, 0.2); }) ==
        ErrorKind::LengthMismatch);
}

TEST_CASE("interpolation is exact at perturbed nodes") {
  const HigginsKernel pert(validate_nodes(sine_perturbed(50)), 50);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> dist;
  std::vector<double> samples;
  for (int i = 0; i < 101; ++i) samples.push_back(dist(rng));
  for (long j = -50; j <= 50; ++j) {
    CHECK(cardinal_reconstruct(pert, samples, pert.node(j)) ==
          samples[static_cast<std::size_t>(j + 50)]);
  }
}

TEST_CASE("partition of unity at integer nodes") {
  const long K = 1024;
  const HigginsKernel ints(integer_nodes(K), K);
  const std::vector<double> ones(static_cast<std::size_t>(2 * K + 1), 1.0);
  for (int i = 0; i <= 20; ++i) {
    const double t = i / 20.0;
    CHECK(std::fabs(cardinal_reconstruct(ints, ones, t) - 1.0) <= 2e-2);
  }
}

TEST_CASE("reconstruct_psi_irregular examples") {
  const QuadratureSpec quad;
  const double sigma = oracle::pi;
  const MellinProfile f = make_shifted(sigma, 0.3);
  const MellinProfile g = make_fejer(sigma);
  const PairedFunction psi = pair_psi(f, g, quad);
  const long K = 512;

  const HigginsKernel ints(integer_nodes(K), K);
  CHECK(reconstruct_psi_irregular(f, g, ints, 0.0, quad) == psi(0.0));

  const MellinProfile ff = make_fejer(sigma);
  const PairedFunction psi_ff = pair_psi(ff, ff, quad);
  CHECK(std::fabs(reconstruct_psi_irregular(ff, ff, ints, 0.37, quad) - psi_ff(0.37)) <= 1e-3);

  const HigginsKernel pert(validate_nodes(sine_perturbed(K)), K);
  const auto s_int = sample_at_nodes(psi, ints);
  const auto s_pert = sample_at_nodes(psi, pert);
  double e_int = 0.0;
  double e_pert = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double t = -2.0 + 4.0 * i / 40;
    const double truth = psi(t);
    e_int = std::max(e_int, std::fabs(cardinal_reconstruct(ints, s_int, t) - truth));
    e_pert = std::max(e_pert, std::fabs(cardinal_reconstruct(pert, s_pert, t) - truth));
  }
  CHECK(e_pert <= 5.0 * e_int);
}

TEST_CASE("Psi reconstruction preconditions") {
  const QuadratureSpec quad;
  const HigginsKernel ints(integer_nodes(8), 8);
  const MellinProfile g = make_fejer(1.0);
  CHECK(kind_of([&] { reconstruct_psi_irregular(make_fejer(4.0), g, ints, 0.1, quad); }) ==
        ErrorKind::BandLimitExceeded);
  CHECK(kind_of([&] {
          reconstruct_psi_irregular(make_wave(1.0), make_fejer(1.0, 1.0), ints, 0.1, quad);
        }) == ErrorKind::InvalidArgument);
}

TEST_CASE("reconstruct_phi_seip examples") {
  const QuadratureSpec quad;
  const double delta = oracle::pi / 2;
  const MellinProfile f = make_fejer(oracle::pi / 2);
  const MellinProfile g = make_fejer(oracle::pi);
  const PairedFunction phi = pair_phi(f, g, quad);
  const long K = 512;
  const HigginsKernel ints(integer_nodes(K), K);
  const auto samples = sample_at_nodes(phi, ints);
  double worst = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double t = -2.0 + 4.0 * i / 40;
    worst = std::max(worst, std::fabs(cardinal_reconstruct(ints, samples, t) - phi(t)));
  }
  CHECK(worst <= 1e-4);
  CHECK(std::fabs(reconstruct_phi_seip(f, g, delta, ints, 0.61, quad) - phi(0.61)) <= 1e-4);

  const HigginsKernel small(integer_nodes(16), 16);
  CHECK(reconstruct_phi_seip(f, g, delta, small, 3.0, quad) == phi(3.0));

  const MellinProfile zero([](double) { return 0.0; }, 1.0, 2.0);
  CHECK(reconstruct_phi_seip(zero, g, delta, small, 0.4, quad) == 0.0);

  CHECK(kind_of([&] { reconstruct_phi_seip(make_fejer(3.0), g, delta, small, 0.4, quad); }) ==
        ErrorKind::BandLimitExceeded);
  CHECK(kind_of([&] { reconstruct_phi_seip(f, g, 0.0, small, 0.4, quad); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { reconstruct_phi_seip(f, g, 4.0, small, 0.4, quad); }) ==
        ErrorKind::InvalidArgument);
}

}
