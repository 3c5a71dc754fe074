// OpenMP kernels against their serial references. Set APNCERT_THREADS to
// choose the worker count of the parallel variants.

#include <benchmark/benchmark.h>

#include "apncert/morsecert.hpp"
#include "apncert/rng.hpp"
#include "apncert/uniformity.hpp"

using namespace apncert;

namespace {

UPoly poly(int n, int m) { return random_poly(Field::make(n), m, 17); }

void BM_delta_parallel(benchmark::State& state)
{
    const UPoly f = poly(static_cast<int>(state.range(0)), 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_exhaustive(f));
    }
}

void BM_delta_serial(benchmark::State& state)
{
    const UPoly f = poly(static_cast<int>(state.range(0)), 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_exhaustive_serial(f));
    }
}

void BM_scan_parallel(benchmark::State& state)
{
    const UPoly f = poly(static_cast<int>(state.range(0)), 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(alpha_scan(f, {}));
    }
}

void BM_scan_serial(benchmark::State& state)
{
    const UPoly f = poly(static_cast<int>(state.range(0)), 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(alpha_scan_serial(f, {}));
    }
}

void BM_certify_parallel(benchmark::State& state)
{
    const UPoly f = poly(28, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify_max(f, {1000000, static_cast<std::uint64_t>(state.range(0)), 4096}));
    }
}

void BM_certify_serial(benchmark::State& state)
{
    const UPoly f = poly(28, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify_max_serial(f, {1000000, static_cast<std::uint64_t>(state.range(0)), 4096}));
    }
}

}  // namespace

BENCHMARK(BM_delta_parallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_delta_serial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_parallel)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_serial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_certify_parallel)->Arg(1)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_certify_serial)->Arg(1)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
