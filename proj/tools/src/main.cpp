#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "redsim/errors.hpp"

#include "commands.hpp"

namespace {

std::vector<std::pair<std::string, double>>
parse_params(const std::vector<std::string>& raw) {
    std::vector<std::pair<std::string, double>> params;
    for (const std::string& kv : raw) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw CLI::ValidationError("--param", "expected key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        try {
            std::size_t used = 0;
            const double value = std::stod(kv.substr(eq + 1), &used);
            if (used != kv.size() - eq - 1)
                throw std::invalid_argument(kv);
            params.emplace_back(key, value);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--param", "not a number in '" + kv + "'");
        }
    }
    return params;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Event-driven simulation of non-Markovian multi-agent dynamics "
                 "on contact networks"};
    app.require_subcommand(1);

    redsim::cli::RunConfig run_config;
    redsim::cli::BenchConfig bench_config;
    std::vector<std::string> run_params_raw;
    std::vector<std::string> bench_params_raw;

    CLI::App* run = app.add_subcommand("run", "Simulate and emit trajectory CSVs");
    run->add_option("--model", run_config.model_name,
                    "Model name: sis, sis-fading, voter")
        ->required();
    run->add_option("--param", run_params_raw,
                    "Model parameter key=value (repeatable)");
    auto* nodes_opt =
        run->add_option("--nodes", run_config.nodes, "Generate a network of N nodes");
    run->add_option("--beta", run_config.beta, "Power-law exponent of the generator");
    run->add_option("--kmin", run_config.k_min, "Minimum degree of the generator");
    auto* edge_opt = run->add_option("--edge-list", run_config.edge_list,
                                     "Load the network from an edge-list file");
    nodes_opt->excludes(edge_opt);
    edge_opt->excludes(nodes_opt);
    run->add_option("--engine", run_config.engine,
                    "Engine: redsim, baseline, naive");
    run->add_option("--horizon", run_config.horizon, "Simulated time horizon");
    run->add_option("--reps", run_config.replications, "Independent replications")
        ->check(CLI::PositiveNumber);
    run->add_option("--seed", run_config.seed, "64-bit master seed");
    run->add_option("--grid", run_config.grid, "Output grid point count")
        ->check(CLI::PositiveNumber);
    run->add_option("--out", run_config.out_dir, "Output directory")->required();
    run->add_option("--jobs", run_config.jobs, "Concurrent replications")
        ->check(CLI::PositiveNumber);

    CLI::App* bench = app.add_subcommand(
        "bench", "Measure per-step cost across engines and network sizes");
    bench->add_option("--engines", bench_config.engines,
                      "Comma-separated engine list (baseline,redsim)")
        ->delimiter(',')
        ->required();
    bench->add_option("--model", bench_config.model_name, "Model name")->required();
    bench->add_option("--param", bench_params_raw,
                      "Model parameter key=value (repeatable)");
    bench->add_option("--sizes", bench_config.sizes,
                      "Comma-separated ascending network sizes")
        ->delimiter(',')
        ->required();
    bench->add_option("--beta", bench_config.beta, "Power-law exponent");
    bench->add_option("--kmin", bench_config.k_min, "Minimum degree");
    bench->add_option("--seed", bench_config.seed, "64-bit master seed");
    bench->add_option("--out", bench_config.out_dir, "Output directory")->required();
    bench->add_option("--warmup", bench_config.warmup_steps,
                      "Successful steps before timing starts");
    bench->add_option("--steps", bench_config.measured_steps,
                      "Successful steps in the timed window");

    try {
        app.parse(argc, argv);
        run_config.params = parse_params(run_params_raw);
        bench_config.params = parse_params(bench_params_raw);
        if (*run && run_config.nodes == 0 && run_config.edge_list.empty())
            throw CLI::RequiredError("run: one of --nodes/--edge-list");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*run)
            return redsim::cli::cmd_run(run_config);
        return redsim::cli::cmd_bench(bench_config);
    } catch (const redsim::BoundViolationError& e) {
        std::cerr << "error: " << e.what() << " [model "
                  << (*run ? run_config.model_name : bench_config.model_name)
                  << "]\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
