#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "redsim/engine.hpp"
#include "redsim/model.hpp"
#include "redsim/network.hpp"

using namespace redsim;

namespace {

ContactNetwork make_powerlaw(std::size_t n, double beta, std::uint64_t seed) {
    RngStream rng(seed);
    const DegreeSequence degrees =
        sample_powerlaw_degrees(n, beta, 3, static_cast<std::uint32_t>(n - 1), rng);
    return configuration_model(degrees, rng);
}

std::vector<StateLabel> five_percent_infected(std::size_t n) {
    std::vector<StateLabel> init(n, StateLabel{0});
    for (std::size_t i = 0; i < n; i += 20)
        init[i] = StateLabel{1};
    return init;
}

// Steady-state per-step cost of one engine on the fading SIS model.
void run_steps(benchmark::State& state, EngineKind kind) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto model = sis_fading(0.4);
    const ContactNetwork network = make_powerlaw(n, 2.0, 99);
    SimState sim(network, five_percent_infected(n), RngStream(7));
    if (kind == EngineKind::RedSim)
        schedule_all(sim, *model);
    else
        schedule_all_frozen(sim, *model);
    const auto step = kind == EngineKind::RedSim ? &redsim_step : &baseline_step;
    // Warm into the endemic regime.
    for (int i = 0; i < 20000; ++i)
        step(sim, *model, nullptr);

    std::uint64_t accepted = 0;
    for (auto _ : state)
        accepted += step(sim, *model, nullptr) == StepOutcome::Accepted;
    state.counters["accept_ratio"] =
        static_cast<double>(accepted) / static_cast<double>(state.iterations());
}

void BM_RedsimStep(benchmark::State& state) { run_steps(state, EngineKind::RedSim); }
void BM_BaselineStep(benchmark::State& state) {
    run_steps(state, EngineKind::Baseline);
}

} // namespace

BENCHMARK(BM_RedsimStep)->Arg(1000)->Arg(10000)->Unit(benchmark::kNanosecond);
BENCHMARK(BM_BaselineStep)->Arg(1000)->Arg(10000)->Unit(benchmark::kNanosecond);
