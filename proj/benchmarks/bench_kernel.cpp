#include <benchmark/benchmark.h>

#include "qmoments/conjectures.hpp"
#include "qmoments/detexact.hpp"
#include "qmoments/moments.hpp"
#include "qmoments/orthopoly.hpp"
#include "qmoments/qcore.hpp"

using namespace qmoments;

static void BM_PolyMul(benchmark::State& state) {
    Poly a = fib_tq(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_PolyMul)->Arg(8)->Arg(12);

static void BM_QBinomTable(benchmark::State& state) {
    for (auto _ : state) {
        QBinomTable table;
        benchmark::DoNotOptimize(table.get(static_cast<int>(state.range(0)),
                                           static_cast<int>(state.range(0)) / 2));
    }
}
BENCHMARK(BM_QBinomTable)->Arg(20)->Arg(40);

static void BM_ExpandQfib(benchmark::State& state) {
    const auto& fam = family("qfib");
    for (auto _ : state) benchmark::DoNotOptimize(expand_in_family(fam, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExpandQfib)->Arg(8)->Arg(12);

static void BM_ExpandLucasTq(benchmark::State& state) {
    const auto& fam = family("lucas_tq");
    for (auto _ : state) benchmark::DoNotOptimize(expand_in_family(fam, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExpandLucasTq)->Arg(9)->Arg(13);

static void BM_HankelDet(benchmark::State& state) {
    const auto& seq = moment_sequence("qcatalan_full");
    for (auto _ : state) benchmark::DoNotOptimize(hankel_det(seq, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HankelDet)->Arg(4)->Arg(6);

static void BM_ConjectureCell(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(check_conjecture({ConjectureId::c3_45, static_cast<int>(state.range(0)), 2}));
}
BENCHMARK(BM_ConjectureCell)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
