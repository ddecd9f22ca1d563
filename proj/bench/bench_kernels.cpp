// Serial reference versus the chunked OpenMP kernels.
#include <benchmark/benchmark.h>

#include <vector>

#include "ncg/kernels.hpp"
#include "ncg/reference.hpp"
#include "ncg/thermo.hpp"

namespace {

constexpr double bench_a = 1.21;
constexpr double bench_tol = 1e-12;
constexpr std::size_t bench_cap = 2'000'000'000;

void BM_LevelSumReference(benchmark::State& state)
{
    const double tau = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ncg::reference::level_sum_serial(tau, bench_a, bench_tol, bench_cap));
    }
}

void BM_LevelSumSerial(benchmark::State& state)
{
    const double tau = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ncg::level_sum(tau, bench_a, bench_tol, bench_cap, ncg::Execution::Serial));
    }
}

void BM_LevelSumParallel(benchmark::State& state)
{
    const double tau = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ncg::level_sum(tau, bench_a, bench_tol, bench_cap, ncg::Execution::Parallel));
    }
    state.counters["threads"] = ncg::max_threads();
}

std::vector<double> sweep_grid()
{
    std::vector<double> taus;
    for (int i = 1; i <= 64; ++i) {
        taus.push_back(0.25 * i);
    }
    return taus;
}

void BM_ThermoSweepReference(benchmark::State& state)
{
    const auto taus = sweep_grid();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            ncg::reference::thermo_sweep_serial(taus, {0.1, 0.1}, ncg::Scheme::DirectSum, 1));
    }
}

void BM_ThermoSweepParallel(benchmark::State& state)
{
    const auto taus = sweep_grid();
    for (auto _ : state) {
        benchmark::DoNotOptimize(ncg::thermo_sweep(taus, {0.1, 0.1}, ncg::Scheme::DirectSum, 1, {},
                                                   ncg::Execution::Parallel));
    }
}

} // namespace

BENCHMARK(BM_LevelSumReference)->Arg(1)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LevelSumSerial)->Arg(1)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LevelSumParallel)->Arg(1)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThermoSweepReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThermoSweepParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
