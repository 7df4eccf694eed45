#include <benchmark/benchmark.h>

#include <cmath>

#include "redsim/rng.hpp"
#include "redsim/sampling.hpp"

using namespace redsim;

static void BM_SampleExponential(benchmark::State& state) {
    RngStream rng(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_exponential(2.0, rng));
}
BENCHMARK(BM_SampleExponential);

static void BM_InversionClosedForm(benchmark::State& state) {
    RngStream rng(2);
    const RateBound bound = RateBound::time_varying(
        {[](double t) { return 2.0 * t; }, [](double t) { return t * t; },
         [](double x) { return std::sqrt(x); }});
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_delay_inversion(bound, rng).delay);
}
BENCHMARK(BM_InversionClosedForm);

static void BM_InversionQuadrature(benchmark::State& state) {
    RngStream rng(3);
    const RateBound bound =
        RateBound::time_varying({[](double t) { return 2.0 * t; }, {}, {}});
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_delay_inversion(bound, rng).delay);
}
BENCHMARK(BM_InversionQuadrature);

static void BM_ThinningTightBound(benchmark::State& state) {
    RngStream rng(4);
    const auto hazard = [](double) { return 3.0; };
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_delay_thinning(hazard, 3.0, rng));
}
BENCHMARK(BM_ThinningTightBound);

static void BM_ThinningLooseBound(benchmark::State& state) {
    RngStream rng(5);
    const double c = state.range(0);
    const auto hazard = [](double) { return 1.0; };
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_delay_thinning(hazard, c, rng));
}
BENCHMARK(BM_ThinningLooseBound)->Arg(2)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
