// Serial reference vs OpenMP kernels. Arg(0) is the serial version, Arg(1)
// the OpenMP one.

#include <benchmark/benchmark.h>

#include <vector>

#include "cmlt/arith.hpp"
#include "cmlt/kernels.hpp"
#include "cmlt/primes.hpp"

namespace k = cmlt::kernels;

namespace {

void BM_trace_sum(benchmark::State& state) {
    const k::TraceSumArgs args{5, 999'983};
    for (auto _ : state)
        benchmark::DoNotOptimize(state.range(0) ? k::omp::trace_sum(args) : k::serial::trace_sum(args));
}

void BM_sweep(benchmark::State& state) {
    const k::SweepArgs args{-21, 1, 100'000'000};
    for (auto _ : state)
        benchmark::DoNotOptimize(state.range(0) ? k::omp::sweep(args) : k::serial::sweep(args));
}

void BM_euler_product(benchmark::State& state) {
    const std::vector<std::uint64_t> primes = cmlt::primes_up_to(10'000'000);
    const k::EulerProductArgs args{primes, -4, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(state.range(0) ? k::omp::euler_product(args)
                                                : k::serial::euler_product(args));
}

void BM_quadratic_primes(benchmark::State& state) {
    const k::QuadraticValuesArgs args{1, 0, 1, 10'000'000'000ULL};
    for (auto _ : state)
        benchmark::DoNotOptimize(state.range(0) ? k::omp::quadratic_primes(args)
                                                : k::serial::quadratic_primes(args));
}

void BM_first_primes(benchmark::State& state) {
    const cmlt::ProgressionSet ps = cmlt::progression_set(-105, 2);
    std::vector<std::uint64_t> offsets;
    for (std::uint64_t kk : ps.ks) offsets.push_back(ps.offset(kk));
    const k::ProgressionSearchArgs args{2, ps.step(), offsets, 100'000};
    for (auto _ : state)
        benchmark::DoNotOptimize(state.range(0) ? k::omp::first_primes(args)
                                                : k::serial::first_primes(args));
}

} // namespace

BENCHMARK(BM_trace_sum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_euler_product)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_quadratic_primes)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_first_primes)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
