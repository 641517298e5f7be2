// Serial reference scan vs the OpenMP-partitioned scan on the same spaces.
// Argument 0 is the thread count: 1 = serial reference, 0 = OpenMP default.

#include "hermspec/constructions.hpp"
#include "hermspec/search.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace hermspec;

void run_oriented(benchmark::State& state, const char* name) {
    const SimpleGraph g = named_underlying(name);
    SearchOptions opt;
    opt.threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = search_orientations(g, opt);
        benchmark::DoNotOptimize(r.hits.size());
    }
}

void run_mixed(benchmark::State& state, const char* name) {
    const SimpleGraph g = named_underlying(name);
    SearchOptions opt;
    opt.threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = search_mixed_orientations(g, opt);
        benchmark::DoNotOptimize(r.hits.size());
    }
}

void run_signings(benchmark::State& state, const char* name) {
    const SimpleGraph g = named_underlying(name);
    SearchOptions opt;
    opt.threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = search_signings(g, opt);
        benchmark::DoNotOptimize(r.hits.size());
    }
}

}  // namespace

BENCHMARK_CAPTURE(run_oriented, K55_minus_M, "K5,5-M")->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run_mixed, cube, "cube")->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run_signings, K6, "K6")->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
