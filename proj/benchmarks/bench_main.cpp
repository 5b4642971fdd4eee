#include <benchmark/benchmark.h>

#include "dioph/conjecture.hpp"
#include "dioph/propositions.hpp"
#include "dioph/search.hpp"
#include "dioph/valuation.hpp"

namespace {

// Fast residue probing vs repeated division on a^n - 1 with n = range(0).
void BM_ValuationFast(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dioph::valuation_pow(dioph::Sign::minus, 3, 2, n));
}
BENCHMARK(BM_ValuationFast)->RangeMultiplier(4)->Range(64, 16384);

void BM_ValuationNaive(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dioph::naive_valuation_pow(dioph::Sign::minus, 3, 2, n));
}
BENCHMARK(BM_ValuationNaive)->RangeMultiplier(4)->Range(64, 16384);

void BM_SolveProp6(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(dioph::solve_prop6(10, 60, 60));
}
BENCHMARK(BM_SolveProp6)->Unit(benchmark::kMillisecond);

void BM_SolveProp9(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(dioph::solve_prop9(8, 40, 40, 12));
}
BENCHMARK(BM_SolveProp9)->Unit(benchmark::kMillisecond);

void BM_SearchMaster(benchmark::State& state)
{
    const auto bound = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dioph::search_master({std::nullopt, bound, 1}));
}
BENCHMARK(BM_SearchMaster)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_ConjectureScan(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(dioph::scan_conjecture(4, 20, 2000, 1));
}
BENCHMARK(BM_ConjectureScan)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
