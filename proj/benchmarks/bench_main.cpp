#include <benchmark/benchmark.h>

#include "rscheck/cli/families.hpp"
#include "rscheck/cli/runner.hpp"
#include "rscheck/qalgebra.hpp"
#include "rscheck/sequences.hpp"
#include "rscheck/verify.hpp"

using namespace rscheck;

static void BM_R(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(seq::R(n));
}
BENCHMARK(BM_R)->Arg(100)->Arg(400)->Arg(1000);

static void BM_S(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(seq::S(n));
}
BENCHMARK(BM_S)->Arg(100)->Arg(400)->Arg(1000);

static void BM_RPoly(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(seq::R_poly(n));
}
BENCHMARK(BM_RPoly)->Arg(50)->Arg(200);

static void BM_VanishingSums(benchmark::State& state) {
  const auto p = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify::check_thm12(p));
}
BENCHMARK(BM_VanishingSums)->Arg(101)->Arg(499)->Arg(997);

static void BM_TwoSquareCongruences(benchmark::State& state) {
  const auto p = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify::check_thm11(p));
}
BENCHMARK(BM_TwoSquareCongruences)->Arg(997)->Arg(1997);

static void BM_QBinomial(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q::q_binomial_poly(n, n / 2));
}
BENCHMARK(BM_QBinomial)->Arg(20)->Arg(60);

static void BM_GrowthScan(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    seq::SequenceCache cache;
    for (unsigned long i = 1; i <= n; ++i) benchmark::DoNotOptimize(verify::check_conj52(i, &cache));
  }
}
BENCHMARK(BM_GrowthScan)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_Family(benchmark::State& state, const char* name) {
  const auto* family = cli::find_family(name);
  for (auto _ : state) {
    const auto tasks = family->tasks(cli::RunOptions{});
    benchmark::DoNotOptimize(cli::run_tasks(tasks, 1));
  }
}
BENCHMARK_CAPTURE(BM_Family, qsuite_thm31, "thm31")->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_CAPTURE(BM_Family, kernel_grid_thm41, "thm41")->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_MAIN();
