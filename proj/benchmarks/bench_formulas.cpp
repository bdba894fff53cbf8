#include <benchmark/benchmark.h>

#include <span>
#include <vector>

#include "abexact/apostol.hpp"
#include "abexact/bernoulli.hpp"
#include "abexact/combinatorics.hpp"

using namespace abexact;

namespace {

void BM_RecurrenceTable(benchmark::State& state) {
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bernoulli_recurrence_table(n));
    }
}
BENCHMARK(BM_RecurrenceTable)->Arg(10)->Arg(30)->Arg(60);

void BM_NumberStirlingSum(benchmark::State& state) {
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bernoulli_number_stirling_sum(n));
    }
}
BENCHMARK(BM_NumberStirlingSum)->Arg(10)->Arg(20)->Arg(40);

void BM_NumberDeterminant(benchmark::State& state) {
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bernoulli_number_determinant(n));
    }
}
BENCHMARK(BM_NumberDeterminant)->Arg(5)->Arg(10)->Arg(20);

void BM_NumberCompositionSum(benchmark::State& state) {
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bernoulli_number_composition_sum(n));
    }
}
BENCHMARK(BM_NumberCompositionSum)->Arg(10)->Arg(15)->Arg(20);

void BM_PolySeriesTable(benchmark::State& state) {
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bernoulli_poly_series_table(n));
    }
}
BENCHMARK(BM_PolySeriesTable)->Arg(6)->Arg(12);

void BM_PolyDeterminant(benchmark::State& state) {
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bernoulli_poly_determinant(n));
    }
}
BENCHMARK(BM_PolyDeterminant)->Arg(4)->Arg(8)->Arg(12);

void BM_ApostolPolyStirlingSum(benchmark::State& state) {
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(apostol_poly_stirling_sum(n));
    }
}
BENCHMARK(BM_ApostolPolyStirlingSum)->Arg(4)->Arg(8)->Arg(12);

void BM_ApostolPolyDeterminant(benchmark::State& state) {
    const auto size = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(apostol_poly_determinant(size));
    }
}
BENCHMARK(BM_ApostolPolyDeterminant)->Arg(3)->Arg(6)->Arg(9);

void BM_ApostolSeriesAtPoint(benchmark::State& state) {
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(apostol_number_series_table_at(n, Rat(2)));
    }
}
BENCHMARK(BM_ApostolSeriesAtPoint)->Arg(10)->Arg(20)->Arg(40);

void BM_ApostolQuotientPathway(benchmark::State& state) {
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(apostol_via_quotient_at(n, Rat(2), Rat(1, 3)));
    }
}
BENCHMARK(BM_ApostolQuotientPathway)->Arg(5)->Arg(10);

void BM_ApostolBellPathway(benchmark::State& state) {
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(apostol_via_bell_at(n, Rat(2), Rat(1, 3)));
    }
}
BENCHMARK(BM_ApostolBellPathway)->Arg(5)->Arg(10);

void BM_BellPartialAllOnes(benchmark::State& state) {
    const auto n = static_cast<unsigned long>(state.range(0));
    const auto k = n / 2;
    const std::vector<Rat> ones(n - k + 1, Rat(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            bell_partial<Rat>(n, k, std::span<const Rat>(ones)));
    }
}
BENCHMARK(BM_BellPartialAllOnes)->Arg(8)->Arg(12)->Arg(16);

void BM_StirlingExplicitSum(benchmark::State& state) {
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(stirling2_sum(n, n / 2));
    }
}
BENCHMARK(BM_StirlingExplicitSum)->Arg(10)->Arg(25)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
