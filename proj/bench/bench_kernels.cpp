// Serial reference vs OpenMP for the parallel kernels. Run with
// OMP_NUM_THREADS set to compare thread counts.

#include <numbers>
#include <random>

#include <benchmark/benchmark.h>

#include "twave/profile_solver.hpp"
#include "twave/spectral.hpp"
#include "twave/sweep.hpp"

using namespace twave;

namespace {

ExecPolicy policy(const benchmark::State& s) { return s.range(0) ? ExecPolicy::Parallel : ExecPolicy::Serial; }

void BM_RegionMap(benchmark::State& state) {
  RegionMapSpec spec;
  spec.n_cs = spec.n_g = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(region_map(spec, policy(state)));
  state.SetItemsProcessed(state.iterations() * spec.n_cs * spec.n_g);
}

void BM_HelmholtzKernel(benchmark::State& state) {
  const Grid g = make_grid(static_cast<int>(state.range(1)), std::numbers::pi);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  const auto f = RealPeriodicField::from_function(g, [&](double x) {
    return u(rng) * std::cos(3 * x) + u(rng) * std::sin(7 * x) + 0.1 * std::cos(40 * x);
  });
  for (auto _ : state) benchmark::DoNotOptimize(helmholtz_kernel(f, policy(state)));
}

void BM_SolveBatch(benchmark::State& state) {
  const double g1s = thresholds(1.0).g1_star;
  std::vector<WaveParameters> points;
  for (int i = 0; i < state.range(1); ++i) points.push_back({1.0, g1s - 0.001 - 0.0001 * i, Branch::Plus});
  for (auto _ : state) benchmark::DoNotOptimize(solve_batch(points, SolverConfig{}, policy(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

}  // namespace

BENCHMARK(BM_RegionMap)->ArgsProduct({{0, 1}, {100, 400}})->ArgNames({"parallel", "n"});
BENCHMARK(BM_HelmholtzKernel)->ArgsProduct({{0, 1}, {256, 1024}})->ArgNames({"parallel", "N"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveBatch)->ArgsProduct({{0, 1}, {8}})->ArgNames({"parallel", "points"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
