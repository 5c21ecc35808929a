#include <benchmark/benchmark.h>

#include <omp.h>

#include "gf2perfect/reference.hpp"
#include "gf2perfect/search.hpp"
#include "gf2perfect/theorem.hpp"

using namespace gf2perfect;

namespace {

void BM_SearchReference(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(reference::search_perfect(static_cast<unsigned>(state.range(0)), SearchMode::Full));
}

void BM_SearchKernel(benchmark::State &state) {
    const ScanOptions o{static_cast<int>(state.range(1)), false};
    for (auto _ : state) benchmark::DoNotOptimize(search_perfect(static_cast<unsigned>(state.range(0)), SearchMode::Full, o));
}

void BM_CensusReference(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(reference::gcd_condition_census(static_cast<unsigned>(state.range(0))));
}

void BM_CensusKernel(benchmark::State &state) {
    const ScanOptions o{static_cast<int>(state.range(1)), false};
    for (auto _ : state) benchmark::DoNotOptimize(gcd_condition_census(static_cast<unsigned>(state.range(0)), o));
}

void BM_TheoremReference(benchmark::State &state) {
    PrimeTable table;
    const auto d = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(reference::theorem_bruteforce(d, d, PrimeMode::Relaxed, table));
}

void BM_TheoremKernel(benchmark::State &state) {
    PrimeTable table;
    const auto d = static_cast<unsigned>(state.range(0));
    const ScanOptions o{static_cast<int>(state.range(1)), false};
    for (auto _ : state) benchmark::DoNotOptimize(theorem_bruteforce(d, d, PrimeMode::Relaxed, table, o));
}

const int kMaxThreads = omp_get_max_threads();

}  // namespace

BENCHMARK(BM_SearchReference)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchKernel)->Args({14, 1})->Args({14, kMaxThreads})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusReference)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusKernel)->Args({12, 1})->Args({12, kMaxThreads})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TheoremReference)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TheoremKernel)->Args({4, 1})->Args({4, kMaxThreads})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
