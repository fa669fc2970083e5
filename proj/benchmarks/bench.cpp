#include <benchmark/benchmark.h>

#include "m0nlab/chow.hpp"
#include "m0nlab/fcone.hpp"
#include "m0nlab/lrq.hpp"
#include "m0nlab/polyfaces.hpp"
#include "m0nlab/subset.hpp"

using namespace m0nlab;

static void BM_EnumerateNested(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        enumerate_nested_sets(n, Kind::Minimal, n - 1,
                              [&](const NestedSet&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateNested)->Arg(5)->Arg(6)->Arg(7);

static void BM_Integrate(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ChowClass l = ChowClass::zero(n);
    for (int i = 0; i <= n; ++i) l += ChowClass::psi(i, n);
    for (auto _ : state) {
        Int v = integrate(power(l, n - 2));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_Integrate)->Arg(5)->Arg(6)->Arg(7);

static void BM_FCurves(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        enumerate_fcurves(n, [&](const FCurve&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_FCurves)->Arg(7)->Arg(9);

static void BM_MultiLR(benchmark::State& state) {
    std::vector<Partition> lams{{2, 1}, {2, 1}, {2, 1}, {2, 1}};
    for (auto _ : state) {
        Int v = multi_lr(lams, 3, 4);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_MultiLR);

static void BM_Witnesses(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        enumerate_witnesses(n, 3, [&](const WitnessQuadruple&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_Witnesses)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
