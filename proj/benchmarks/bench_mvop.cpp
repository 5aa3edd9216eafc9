#include <benchmark/benchmark.h>

#include "mvop/mvop.hpp"

namespace {

const mvop::ParamSet kParams = mvop::validate_params(0.5, -0.25, 1.1);

void BM_MonicPolynomial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mvop::monic_polynomial(kParams, n));
    }
}
BENCHMARK(BM_MonicPolynomial)->Arg(5)->Arg(20)->Arg(50);

void BM_RecurrenceClosed(benchmark::State& state) {
    for (auto _ : state) {
        for (int n = 0; n <= 20; ++n) {
            benchmark::DoNotOptimize(mvop::recurrence_closed(kParams, n));
        }
    }
}
BENCHMARK(BM_RecurrenceClosed);

void BM_Norms(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mvop::norms(kParams, n));
    }
}
BENCHMARK(BM_Norms)->Arg(20)->Arg(50);

void BM_InnerProduct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const mvop::MatrixPolynomial p = mvop::monic_polynomial(kParams, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mvop::inner_product(p, p, kParams));
    }
}
BENCHMARK(BM_InnerProduct)->Arg(5)->Arg(20);

void BM_H21Eval(benchmark::State& state) {
    const mvop::HypergeometricOperator op = mvop::build_operator(kParams);
    const mvop::Vec2 f0{1.0, 0.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(mvop::h21_eval(op.C, op.U, op.V, f0, 0.7, 1e-12));
    }
}
BENCHMARK(BM_H21Eval);

void BM_CheckSymmetry(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(mvop::check_symmetry(kParams));
    }
}
BENCHMARK(BM_CheckSymmetry);

void BM_Commutant(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(mvop::commutant(kParams, 5));
    }
}
BENCHMARK(BM_Commutant);

} // namespace

BENCHMARK_MAIN();
