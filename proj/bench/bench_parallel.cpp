// Serial reference against the OpenMP kernels.

#include "sj/spectral.hpp"
#include "sj/volume.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_VolumeEstimateSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sj::volume_estimate_F1_serial(static_cast<std::uint64_t>(state.range(0)), 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VolumeEstimateSerial)->Arg(1 << 18)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_VolumeEstimateParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sj::volume_estimate_F1(static_cast<std::uint64_t>(state.range(0)), 42, static_cast<int>(state.range(1))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VolumeEstimateParallel)
    ->ArgsProduct({{1 << 18, 1 << 20}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond);

void BM_TorusGram(benchmark::State& state) {
  const auto P = sj::SiegelPoint::from_omega(sj::CMat(1, 1, sj::cplx(0.3, 1.2)));
  const auto idx = sj::character_box(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sj::torus_gram(P, idx, static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  }
}
BENCHMARK(BM_TorusGram)->ArgsProduct({{64, 256}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
