// Serial reference vs OpenMP kernels on the two heavy sweeps.

#include <benchmark/benchmark.h>

#include "wpat/kernels.hpp"

using namespace wpat;

namespace {

void oracle_serial(benchmark::State& state) {
    const GenericTriple t{static_cast<int>(state.range(0)), state.range(1), state.range(2)};
    for (auto _ : state) {
        auto weights = oracle_weight_set_serial(t);
        benchmark::DoNotOptimize(weights);
    }
}

void oracle_openmp(benchmark::State& state) {
    const GenericTriple t{static_cast<int>(state.range(0)), state.range(1), state.range(2)};
    for (auto _ : state) {
        auto weights = oracle_weight_set(t);
        benchmark::DoNotOptimize(weights);
    }
}

void block_weights_serial(benchmark::State& state) {
    const GenericTriple t{static_cast<int>(state.range(0)), state.range(1), state.range(2)};
    for (auto _ : state) {
        auto weights = block_weights_only(t);
        benchmark::DoNotOptimize(weights);
    }
}

void block_weights_openmp(benchmark::State& state) {
    const GenericTriple t{static_cast<int>(state.range(0)), state.range(1), state.range(2)};
    for (auto _ : state) {
        auto weights = block_weights_parallel(t);
        benchmark::DoNotOptimize(weights);
    }
}

void stability_serial(benchmark::State& state) {
    for (auto _ : state) {
        auto sweep = shi_stability_sweep_serial(static_cast<int>(state.range(0)), state.range(1),
                                                {3, 4, 5});
        benchmark::DoNotOptimize(sweep);
    }
}

void stability_openmp(benchmark::State& state) {
    for (auto _ : state) {
        auto sweep =
            shi_stability_sweep(static_cast<int>(state.range(0)), state.range(1), {3, 4, 5});
        benchmark::DoNotOptimize(sweep);
    }
}

} // namespace

BENCHMARK(oracle_serial)->Args({3, 10, 5})->Args({4, 8, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(oracle_openmp)->Args({3, 10, 5})->Args({4, 8, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(block_weights_serial)->Args({5, 6, 12})->Args({4, 9, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(block_weights_openmp)->Args({5, 6, 12})->Args({4, 9, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(stability_serial)->Args({4, 10})->Args({4, 14})->Unit(benchmark::kMillisecond);
BENCHMARK(stability_openmp)->Args({4, 10})->Args({4, 14})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
