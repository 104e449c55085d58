#include <benchmark/benchmark.h>

#include <eulerrefine/bijection.hpp>
#include <eulerrefine/permutation.hpp>
#include <eulerrefine/sequences.hpp>

using namespace eulerrefine;

static void BM_EnumerateUpDown(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long count = 0;
        for_each_alternating(n, AltKind::UpDown, [&](std::span<const int>) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateUpDown)->DenseRange(6, 11, 1);

static void BM_CountRefinements(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_refinements(n, threads));
    }
}
BENCHMARK(BM_CountRefinements)->ArgsProduct({{10, 11}, {1, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_EulerNumbers(benchmark::State& state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(euler_numbers(n));
    }
}
BENCHMARK(BM_EulerNumbers)->Arg(50)->Arg(200)->Arg(800);

static void BM_EUpFormula(benchmark::State& state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    const auto euler = euler_numbers(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(e_up_formula(n, euler));
    }
}
BENCHMARK(BM_EUpFormula)->Arg(20)->Arg(60)->Arg(200);

static void BM_MaxMinToSmu(benchmark::State& state)
{
    const auto perms = enumerate_alternating(static_cast<int>(state.range(0)), AltKind::UpDown);
    std::vector<Permutation> domain;
    for (const auto& p : perms) {
        if (is_max_min_up_down_even(p)) {
            domain.push_back(p);
        }
    }
    for (auto _ : state) {
        for (const auto& p : domain) {
            benchmark::DoNotOptimize(maxmin_to_smu(p, false));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(domain.size()));
}
BENCHMARK(BM_MaxMinToSmu)->Arg(6)->Arg(8);
