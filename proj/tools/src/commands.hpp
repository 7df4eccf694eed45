#ifndef REDSIM_TOOLS_COMMANDS_HPP
#define REDSIM_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace redsim::cli {

struct RunConfig {
    std::string model_name;
    std::vector<std::pair<std::string, double>> params;
    // Network source: generator when nodes > 0, file otherwise.
    std::size_t nodes = 0;
    double beta = 2.5;
    std::uint32_t k_min = 3;
    std::string edge_list;
    std::string engine = "redsim";
    double horizon = 10.0;
    std::uint32_t replications = 1;
    std::uint64_t seed = 1;
    std::uint32_t grid = 101;
    std::string out_dir;
    std::uint32_t jobs = 1;
};

struct BenchConfig {
    std::vector<std::string> engines;
    std::string model_name;
    std::vector<std::pair<std::string, double>> params;
    std::vector<std::uint64_t> sizes;
    double beta = 2.5;
    std::uint32_t k_min = 3;
    std::uint64_t seed = 1;
    std::string out_dir;
    std::uint64_t warmup_steps = 10000;
    std::uint64_t measured_steps = 100000;
};

int cmd_run(const RunConfig& config);
int cmd_bench(const BenchConfig& config);

} // namespace redsim::cli

#endif
