#include <benchmark/benchmark.h>

#include "nk/euler_maclaurin.hpp"
#include "nk/saddle.hpp"

namespace {

nk::SummandContext context(int n) {
  nk::SummandContext c;
  c.alpha = 2.0;
  c.n = n;
  c.zeta = 0.5;
  return c;
}

void BM_FindXstar(benchmark::State& state) {
  const auto c = context(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nk::find_xstar(c));
}
BENCHMARK(BM_FindXstar)->Arg(200)->Arg(3200);

void BM_SummandSum(benchmark::State& state) {
  const auto c = context(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nk::summand_sum(c));
}
BENCHMARK(BM_SummandSum)->Arg(200)->Arg(3200);

// Dominated by one adaptive quadrature per unit interval.
void BM_EmDecompose(benchmark::State& state) {
  const auto c = context(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nk::em_decompose(c));
}
BENCHMARK(BM_EmDecompose)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

}  // namespace
