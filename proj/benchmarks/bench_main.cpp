#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "mellin/bernstein.hpp"
#include "mellin/irregular_sampling.hpp"
#include "mellin/regular_sampling.hpp"
#include "mellin/riesz_boas.hpp"
#include "mellin/sinc.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

void BM_Sinc(benchmark::State& state) {
  double u = 0.123;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mellin::sinc(u));
    u += 1e-3;
  }
}
BENCHMARK(BM_Sinc);

void BM_BuildCoeffs(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mellin::build_coeffs(r, kPi, 4096));
}
BENCHMARK(BM_BuildCoeffs)->Arg(1)->Arg(2)->Arg(4);

void BM_BoasApply(benchmark::State& state) {
  const mellin::MellinProfile f = mellin::make_fejer(kPi);
  const mellin::RieszBoasCoeffs c = mellin::build_coeffs(1, kPi, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mellin::boas_apply(f, c, 1.3));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BoasApply)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oN);

void BM_HigginsKernel(benchmark::State& state) {
  const long K = state.range(0);
  std::vector<double> raw;
  for (long k = -K; k <= K; ++k) raw.push_back(static_cast<double>(k) + std::sin(static_cast<double>(k)) / 8);
  const mellin::NodeSequence nodes = mellin::validate_nodes(raw);
  for (auto _ : state) benchmark::DoNotOptimize(mellin::HigginsKernel(nodes, K));
}
BENCHMARK(BM_HigginsKernel)->Arg(128)->Arg(512)->Arg(2048);

void BM_CardinalReconstruct(benchmark::State& state) {
  const long K = state.range(0);
  const mellin::HigginsKernel kernel(mellin::integer_nodes(K), K);
  std::vector<double> samples;
  for (long k = -K; k <= K; ++k) samples.push_back(mellin::sinc(static_cast<double>(k) / 2));
  double t = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mellin::cardinal_reconstruct(kernel, samples, t));
    t += 1e-6;
  }
}
BENCHMARK(BM_CardinalReconstruct)->Arg(128)->Arg(512)->Arg(2048);

void BM_Valiron(benchmark::State& state) {
  const long N = state.range(0);
  const mellin::SampleSet s =
      mellin::sample_profile(mellin::make_wave(kPi), mellin::ExponentialGrid(kPi, 1.0, N));
  for (auto _ : state) benchmark::DoNotOptimize(mellin::valiron_reconstruct(s, 1.7, N));
}
BENCHMARK(BM_Valiron)->Arg(256)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
