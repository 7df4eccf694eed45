#ifndef REDSIM_TRAJECTORY_HPP
#define REDSIM_TRAJECTORY_HPP

#include <cstdint>
#include <vector>

namespace redsim {

struct TrajectorySummary {
    std::uint64_t accepted_steps = 0;
    std::uint64_t rejected_steps = 0;
    double elapsed_ns = 0.0; // wall clock of the step loop

    std::uint64_t total_steps() const { return accepted_steps + rejected_steps; }
    double ns_per_successful_step() const {
        return accepted_steps == 0 ? 0.0
                                   : elapsed_ns / static_cast<double>(accepted_steps);
    }
};

/// Time-grid samples of the per-state agent counts plus step statistics.
/// counts[i][s] is the number of agents in state s at times[i]; every row
/// sums to the node count.
struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<std::uint32_t>> counts;
    TrajectorySummary summary;
};

} // namespace redsim

#endif
