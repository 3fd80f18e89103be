#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "nk/correlations.hpp"
#include "nk/kernel_exact.hpp"
#include "nk/taylor_a2.hpp"

namespace {

void BM_Kernel(benchmark::State& state) {
  const nk::KernelParams p{1.5, static_cast<int>(state.range(0))};
  const nk::cplx z(0.4, 0.2);
  const nk::cplx w(0.35, -0.1);
  for (auto _ : state) benchmark::DoNotOptimize(nk::kernel(z, w, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Kernel)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_DensityExact(benchmark::State& state) {
  const nk::KernelParams p{2.0, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(nk::density_exact(0.5, p));
}
BENCHMARK(BM_DensityExact)->Arg(100)->Arg(2000);

void BM_KernelMatrix(benchmark::State& state) {
  std::vector<nk::cplx> pts;
  for (int i = 0; i < state.range(0); ++i) pts.emplace_back(0.05 * i, 0.03 * i);
  const nk::KernelParams p{2.0, 400};
  for (auto _ : state) benchmark::DoNotOptimize(nk::kernel_matrix(pts, p));
}
BENCHMARK(BM_KernelMatrix)->DenseRange(2, 12, 5);

void BM_DetScaled(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const Eigen::MatrixXcd m = Eigen::MatrixXcd::Random(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(nk::det_scaled(m));
}
BENCHMARK(BM_DetScaled)->Arg(2)->Arg(5)->Arg(12);

void BM_TruncatedExp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nk::truncated_exp({0.3, 0.1}, n));
}
BENCHMARK(BM_TruncatedExp)->Arg(50)->Arg(3200);

}  // namespace
