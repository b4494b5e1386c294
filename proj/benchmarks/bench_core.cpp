#include <benchmark/benchmark.h>

#include "deltagame/calgebra.hpp"
#include "deltagame/curves.hpp"
#include "deltagame/linalg.hpp"
#include "deltagame/lp.hpp"
#include "deltagame/vect.hpp"

namespace {

void BM_PsdCheck(benchmark::State& state) {
    const auto g = deltagame::vect::build_gram(0.5, 0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(deltagame::linalg::psd_check(g, 1e-10));
    }
}
BENCHMARK(BM_PsdCheck);

void BM_BetaMinBisection(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(deltagame::vect::beta_min_numeric(0.47, 1e-8));
    }
}
BENCHMARK(BM_BetaMinBisection);

void BM_SimplexBeta0(benchmark::State& state) {
    const auto prog = deltagame::lp::beta0_program(0.47);
    for (auto _ : state) {
        benchmark::DoNotOptimize(deltagame::lp::solve(prog));
    }
}
BENCHMARK(BM_SimplexBeta0);

void BM_OptimalStateCorrelation(benchmark::State& state) {
    for (auto _ : state) {
        const auto opt = deltagame::alg::optimal_state(0.47);
        benchmark::DoNotOptimize(deltagame::alg::correlation_from_state(opt.state));
    }
}
BENCHMARK(BM_OptimalStateCorrelation);

void BM_CurveTable(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            deltagame::curves::build_curve_table(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_CurveTable)->Arg(101)->Arg(1001);

}  // namespace

BENCHMARK_MAIN();
