#include <benchmark/benchmark.h>

#include "fixtures.hpp"

#include "critex/exponents.hpp"
#include "critex/oracle.hpp"
#include "critex/quotient.hpp"

using namespace critex;

namespace {

void BM_PeriodLanguage(benchmark::State& state, const char* name)
{
    const auto a = fixtures::sequence(name);
    for (auto _ : state)
        benchmark::DoNotOptimize(period_language(a).state_count());
}
BENCHMARK_CAPTURE(BM_PeriodLanguage, tm, "tm.dfao")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PeriodLanguage, rs, "rs.dfao")->Unit(benchmark::kMillisecond);

void BM_Sup(benchmark::State& state, const char* name)
{
    const auto l = period_language(fixtures::sequence(name));
    for (auto _ : state)
        benchmark::DoNotOptimize(sup_quo(l).value);
}
BENCHMARK_CAPTURE(BM_Sup, tm, "tm.dfao")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sup, rs, "rs.dfao")->Unit(benchmark::kMillisecond);

void BM_SpecialPoint(benchmark::State& state)
{
    const auto l = period_language(fixtures::sequence("vtm.dfao"));
    for (auto _ : state)
        benchmark::DoNotOptimize(largest_special_point(l).value);
}
BENCHMARK(BM_SpecialPoint)->Unit(benchmark::kMillisecond);

// Comparator size grows with numerator * denominator of the threshold.
void BM_Comparator(benchmark::State& state)
{
    const Rational beta(BigInt(state.range(0) * 2 + 1), BigInt(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(comparator_dfa({beta, Relation::gt, Radix(2)}).state_count());
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Comparator)->RangeMultiplier(2)->Range(1, 64)->Complexity();

void BM_ThresholdSearch(benchmark::State& state)
{
    const auto l = period_language(fixtures::sequence("rs.dfao"));
    const Rational beta(BigInt(state.range(0) * 4 - 1), BigInt(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(meets(l, {beta, Relation::gt, Radix(2)}));
}
BENCHMARK(BM_ThresholdSearch)->RangeMultiplier(4)->Range(1, 1 << 12);

void BM_OracleScan(benchmark::State& state)
{
    const auto s = oracle::sequence_prefix(fixtures::sequence("rs.dfao"),
                                           static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::scan_max_exponent(s, 64).exponent);
}
BENCHMARK(BM_OracleScan)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
