#include <benchmark/benchmark.h>

#include "nk/radial_sampler.hpp"

namespace {

void BM_SampleRadii(benchmark::State& state) {
  const nk::KernelParams p{2.0, static_cast<int>(state.range(0))};
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(nk::sample_radii(p, seed++));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleRadii)->Arg(100)->Arg(500)->Arg(5000);

void BM_KsDistance(benchmark::State& state) {
  std::vector<nk::RadialSample> pool;
  for (std::uint64_t s = 0; s < 100; ++s) pool.push_back(nk::sample_radii({2.0, 500}, s));
  for (auto _ : state) benchmark::DoNotOptimize(nk::ks_distance(pool));
}
BENCHMARK(BM_KsDistance)->Unit(benchmark::kMillisecond);

}  // namespace
