#include <benchmark/benchmark.h>

#include <random>

#include "oddrank/arrays.hpp"
#include "oddrank/durfee.hpp"
#include "oddrank/lambert.hpp"
#include "oddrank/products.hpp"
#include "oddrank/uops.hpp"
#include "oddrank/workspace.hpp"

using namespace oddrank;

namespace {

QSeries dense_series(Exp len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<Int> v(static_cast<std::size_t>(len));
    for (auto& x : v) x = coeff(rng);
    v[0] = 1;
    return QSeries(0, std::move(v));
}

} // namespace

static void BM_series_mul(benchmark::State& state) {
    Exp n = state.range(0);
    QSeries a = dense_series(n, 1);
    QSeries b = dense_series(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.SetComplexityN(n);
}
BENCHMARK(BM_series_mul)->Arg(256)->Arg(1024)->Arg(4096)->Complexity(benchmark::oNSquared);

static void BM_series_invert(benchmark::State& state) {
    Exp n = state.range(0);
    QSeries a = dense_series(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_series_invert)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_pochhammer(benchmark::State& state) {
    Exp n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(pochhammer_expand(1, 1, n));
}
BENCHMARK(BM_pochhammer)->Arg(4096)->Arg(16384);

static void BM_partition_series(benchmark::State& state) {
    // sparse-aware inversion of (q;q)_inf
    Exp n = state.range(0);
    QSeries euler = pochhammer_expand(1, 1, n);
    for (auto _ : state) benchmark::DoNotOptimize(euler.inverse());
}
BENCHMARK(BM_partition_series)->Arg(4096)->Arg(16384);

static void BM_lambert_expand(benchmark::State& state) {
    LambertSpec spec;
    spec.A = 75;
    spec.B = 65;
    spec.C = 13;
    spec.d = 50;
    spec.e = 15;
    spec.alternating = true;
    for (auto _ : state) benchmark::DoNotOptimize(lambert_expand(spec, state.range(0)));
}
BENCHMARK(BM_lambert_expand)->Arg(400)->Arg(2000);

static void BM_u_operator(benchmark::State& state) {
    Workspace ws;
    for (auto _ : state) benchmark::DoNotOptimize(u_ij(ws, 0, 0, -1, state.range(0)));
}
BENCHMARK(BM_u_operator)->Arg(100)->Arg(200);

static void BM_rank_table(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(RankTable(state.range(0)));
}
BENCHMARK(BM_rank_table)->Arg(120)->Arg(240)->Unit(benchmark::kMillisecond);

static void BM_eta_quotient(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(eta_quotient_expand(eta_t(), state.range(0)));
}
BENCHMARK(BM_eta_quotient)->Arg(500)->Arg(2500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
