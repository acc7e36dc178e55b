#include <benchmark/benchmark.h>

#include "mns/criteria.hpp"
#include "mns/digits.hpp"
#include "mns/norms.hpp"
#include "mns/representation.hpp"

namespace {

mns::IntMatrix twin_dragon() { return mns::IntMatrix{{1, 1}, {-1, 1}}; }

mns::IntMatrix four_d() {
    return mns::IntMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, -1, 2}, {-1, 0, -1, 1}};
}

void BM_DigitSet_TwinDragon(benchmark::State& state) {
    const mns::IntMatrix A = twin_dragon();
    for (auto _ : state) {
        benchmark::DoNotOptimize(mns::digit_set(A));
    }
}
BENCHMARK(BM_DigitSet_TwinDragon);

void BM_Divide_4D(benchmark::State& state) {
    const mns::DigitSet ds = mns::digit_set(four_d());
    const mns::IntVec x{mns::Int(37), mns::Int(-118), mns::Int(5), mns::Int(91)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ds.divide(x));
    }
}
BENCHMARK(BM_Divide_4D);

void BM_SteinSolve_4D(benchmark::State& state) {
    const mns::IntMatrix A = four_d();
    for (auto _ : state) {
        benchmark::DoNotOptimize(mns::make_norm_evaluator(A));
    }
}
BENCHMARK(BM_SteinSolve_4D);

void BM_Pseudodigits_TwinDragon(benchmark::State& state) {
    const mns::IntMatrix A = twin_dragon();
    const mns::DigitSet ds = mns::digit_set(A);
    const mns::BoundsReport br = mns::bounds_report(mns::make_norm_evaluator(A));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mns::pseudodigits(ds, br));
    }
}
BENCHMARK(BM_Pseudodigits_TwinDragon);

void BM_Represent_TwinDragon(benchmark::State& state) {
    const mns::IntMatrix A = twin_dragon();
    const mns::DigitSet ds = mns::digit_set(A);
    const mns::PseudodigitTable table =
        mns::pseudodigits(ds, mns::bounds_report(mns::make_norm_evaluator(A)));
    const mns::IntVec x{mns::Int(987654321), mns::Int(-123456789)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(mns::represent(ds, table, x));
    }
}
BENCHMARK(BM_Represent_TwinDragon);

}  // namespace

BENCHMARK_MAIN();
