#include <benchmark/benchmark.h>

#include "montesinos/toroidal.hpp"

using namespace montesinos;

static void BM_Skeletons(benchmark::State& state) {
    const Rational t(13, 31);
    const SkeletonOptions opt{Rational(1), static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_skeletons(t, opt));
}
BENCHMARK(BM_Skeletons)->DenseRange(4, 8, 2);

static void BM_SolveSystems(benchmark::State& state) {
    const KnotParams k = parse_knot("K(-2/5,3/7,4/9)");
    const SolveOptions opt{Rational(1), static_cast<int>(state.range(0)), -1};
    std::size_t n = 0;
    for (auto _ : state) {
        auto v = solve_systems(k, opt);
        n = v.size();
        benchmark::DoNotOptimize(v);
    }
    state.counters["systems"] = static_cast<double>(n);
}
BENCHMARK(BM_SolveSystems)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

static void BM_FindToroidal(benchmark::State& state) {
    const KnotParams k = parse_knot("K(-1/2,1/3,1/7)");
    for (auto _ : state) benchmark::DoNotOptimize(find_toroidal(k));
}
BENCHMARK(BM_FindToroidal)->Unit(benchmark::kMicrosecond);

static void BM_Canonicalize(benchmark::State& state) {
    const KnotParams k = parse_knot("K(7/3,-11/5,5/9)");
    for (auto _ : state) benchmark::DoNotOptimize(canonicalize(k));
}
BENCHMARK(BM_Canonicalize);

static void BM_Census(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(census(state.range(0)));
}
BENCHMARK(BM_Census)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_VerifyTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_table(state.range(0)));
}
BENCHMARK(BM_VerifyTable)->Arg(3)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
