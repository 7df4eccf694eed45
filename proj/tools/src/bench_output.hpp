#ifndef REDSIM_TOOLS_BENCH_OUTPUT_HPP
#define REDSIM_TOOLS_BENCH_OUTPUT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace redsim::cli {

struct BenchRecord {
    std::string engine;
    std::string model;
    std::uint64_t node_count = 0;
    double beta = 0.0;
    std::uint64_t total_steps = 0;
    std::uint64_t successful_steps = 0;
    std::uint64_t rejected_steps = 0;
    double ns_per_successful_step = 0.0;
};

std::string bench_json(const std::vector<BenchRecord>& records);

/// Log-log chart of ns-per-successful-step vs network size, one series per
/// engine. A pure function of the records, so the plot can be regenerated
/// from the JSON offline.
std::string bench_svg(const std::vector<BenchRecord>& records);

} // namespace redsim::cli

#endif
