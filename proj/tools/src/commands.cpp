#include "commands.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "redsim/engine.hpp"
#include "redsim/io.hpp"
#include "redsim/network.hpp"
#include "redsim/quadrature.hpp"

#include "bench_output.hpp"
#include "init_assignment.hpp"

namespace fs = std::filesystem;

namespace redsim::cli {

namespace {

ContactNetwork generate_network(std::size_t nodes, double beta, std::uint32_t k_min,
                                RngStream& rng) {
    const auto k_max = static_cast<std::uint32_t>(nodes - 1);
    const DegreeSequence degrees =
        sample_powerlaw_degrees(nodes, beta, k_min, k_max, rng);
    ConfigModelStats stats;
    ContactNetwork net = configuration_model(degrees, rng, &stats);
    if (stats.erased_stubs > 0) {
        std::cerr << "note: configuration model erased " << stats.erased_stubs
                  << " of " << stats.total_stubs
                  << " stubs (self-loops/multi-edges)\n";
    }
    return net;
}

std::string replication_filename(std::uint32_t rep) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "trajectory_%03u.csv", rep);
    return buf;
}

void write_text(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
}

} // namespace

int cmd_run(const RunConfig& config) {
    const auto model = make_model(config.model_name, config.params);
    const EngineKind engine = engine_from_name(config.engine);
    RngStream root(config.seed);

    ContactNetwork network = [&] {
        if (!config.edge_list.empty())
            return read_edge_list(config.edge_list);
        RngStream generator = root.split(0);
        return generate_network(config.nodes, config.beta, config.k_min, generator);
    }();

    fs::create_directories(config.out_dir);

    std::vector<Trajectory> trajectories(config.replications);
    std::atomic<std::uint32_t> next_rep{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    const auto worker = [&] {
        for (;;) {
            const std::uint32_t rep = next_rep.fetch_add(1);
            if (rep >= config.replications || failed.load())
                return;
            try {
                RngStream stream = root.split(rep + 1);
                const std::vector<StateLabel> init = initial_assignment(
                    config.model_name, network.node_count(), stream);
                trajectories[rep] =
                    run_simulation(engine, *model, network, init, config.horizon,
                                   std::move(stream), config.grid);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failed.store(true);
                failure = std::string(e.what()) + " [replication " +
                          std::to_string(rep) + ", model " + config.model_name +
                          "]";
            }
        }
    };

    const std::uint32_t jobs =
        std::max<std::uint32_t>(1, std::min(config.jobs, config.replications));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::uint32_t j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }
    if (failed.load())
        throw std::runtime_error(failure);

    for (std::uint32_t rep = 0; rep < config.replications; ++rep)
        write_trajectory_csv(fs::path(config.out_dir) / replication_filename(rep),
                             trajectories[rep], *model);
    write_mean_trajectory_csv(fs::path(config.out_dir) / "trajectory_mean.csv",
                              trajectories, *model);
    return 0;
}

namespace {

BenchRecord time_engine(EngineKind kind, const AgentModel& model,
                        const ContactNetwork& network,
                        std::span<const StateLabel> init, RngStream rng,
                        std::uint64_t warmup, std::uint64_t measured) {
    SimState state(network, init, std::move(rng));
    if (kind == EngineKind::RedSim)
        schedule_all(state, model);
    else
        schedule_all_frozen(state, model);

    const auto step = kind == EngineKind::RedSim ? &redsim_step : &baseline_step;
    const auto exhausted = [&] {
        return state.queue.empty() ||
               !std::isfinite(state.queue.peek().t_hat);
    };
    // A long rejection streak means the dynamics are absorbed while the
    // queue keeps producing candidate events; stop measuring.
    const std::uint64_t max_streak = 2000000;

    std::uint64_t streak = 0;
    while (state.counters.accepted < warmup && !exhausted() && streak < max_streak)
        streak = step(state, model, nullptr) == StepOutcome::Accepted ? 0 : streak + 1;

    state.counters = {};
    streak = 0;
    const auto start = std::chrono::steady_clock::now();
    while (state.counters.accepted < measured && !exhausted() && streak < max_streak)
        streak = step(state, model, nullptr) == StepOutcome::Accepted ? 0 : streak + 1;
    const auto stop = std::chrono::steady_clock::now();

    BenchRecord record;
    record.engine = std::string(engine_name(kind));
    record.model = std::string(model.name());
    record.node_count = network.node_count();
    record.successful_steps = state.counters.accepted;
    record.rejected_steps = state.counters.rejected;
    record.total_steps = state.counters.accepted + state.counters.rejected;
    const double elapsed =
        std::chrono::duration<double, std::nano>(stop - start).count();
    record.ns_per_successful_step =
        state.counters.accepted == 0
            ? 0.0
            : elapsed / static_cast<double>(state.counters.accepted);
    return record;
}

} // namespace

int cmd_bench(const BenchConfig& config) {
    for (std::size_t i = 1; i < config.sizes.size(); ++i)
        if (config.sizes[i] <= config.sizes[i - 1])
            throw std::invalid_argument("bench: sizes must be strictly ascending");

    std::vector<EngineKind> engines;
    for (const std::string& name : config.engines) {
        const EngineKind kind = engine_from_name(name);
        if (kind == EngineKind::Naive)
            throw std::invalid_argument(
                "bench: the naive engine is a test oracle; use baseline/redsim");
        engines.push_back(kind);
    }
    const auto model = make_model(config.model_name, config.params);
    RngStream root(config.seed);

    std::vector<BenchRecord> records;
    for (std::size_t i = 0; i < config.sizes.size(); ++i) {
        const std::size_t nodes = config.sizes[i];
        RngStream setup = root.split(i + 1);
        const ContactNetwork network =
            generate_network(nodes, config.beta, config.k_min, setup);
        const std::vector<StateLabel> init =
            initial_assignment(config.model_name, nodes, setup);
        for (const EngineKind kind : engines) {
            // Timing runs stay strictly serial; each gets its own stream.
            BenchRecord record = time_engine(
                kind, *model, network, init,
                setup.split(static_cast<std::uint64_t>(kind) + 100),
                config.warmup_steps, config.measured_steps);
            record.beta = config.beta;
            records.push_back(std::move(record));
            std::cerr << "bench: " << records.back().engine << " n=" << nodes
                      << " ns/step=" << records.back().ns_per_successful_step
                      << " (accepted " << records.back().successful_steps
                      << ", rejected " << records.back().rejected_steps << ")\n";
        }
    }

    fs::create_directories(config.out_dir);
    write_text(fs::path(config.out_dir) / "bench.json", bench_json(records));
    write_text(fs::path(config.out_dir) / "bench.svg", bench_svg(records));
    return 0;
}

} // namespace redsim::cli
