#ifndef REDSIM_IO_HPP
#define REDSIM_IO_HPP

#include <filesystem>
#include <span>
#include <string>

#include "redsim/model.hpp"
#include "redsim/trajectory.hpp"

namespace redsim {

/// Trajectory CSV: header `time,<state0>,<state1>,...` in model state order,
/// times with 6 fractional digits, integer counts.
std::string trajectory_csv(const Trajectory& trajectory, const AgentModel& model);

void write_trajectory_csv(const std::filesystem::path& path,
                          const Trajectory& trajectory, const AgentModel& model);

/// Pointwise mean of replication trajectories (identical grids required);
/// counts become 6-digit decimals.
std::string mean_trajectory_csv(std::span<const Trajectory> trajectories,
                                const AgentModel& model);

void write_mean_trajectory_csv(const std::filesystem::path& path,
                               std::span<const Trajectory> trajectories,
                               const AgentModel& model);

} // namespace redsim

#endif
