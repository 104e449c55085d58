#include <benchmark/benchmark.h>

#include <eulerrefine/series.hpp>

using namespace eulerrefine;

static void BM_SecReciprocal(benchmark::State& state)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sec_egf(order));
    }
}
BENCHMARK(BM_SecReciprocal)->Arg(20)->Arg(60)->Arg(120);

static void BM_Tan(benchmark::State& state)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tan_egf(order));
    }
}
BENCHMARK(BM_Tan)->Arg(20)->Arg(60);

static void BM_MaxMinEgf(benchmark::State& state)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(named::max_min_egf(order));
    }
}
BENCHMARK(BM_MaxMinEgf)->Arg(20)->Arg(40);
