#ifndef REDSIM_TOOLS_INIT_ASSIGNMENT_HPP
#define REDSIM_TOOLS_INIT_ASSIGNMENT_HPP

#include <string_view>
#include <vector>

#include "redsim/model.hpp"
#include "redsim/rng.hpp"

namespace redsim::cli {

/// Default initial condition per model: SIS variants start with 5% infected
/// agents (at least one), the voter model with an even opinion split
/// (|#A - #B| <= 1). Which agents get which state is drawn from `rng`.
std::vector<StateLabel> initial_assignment(std::string_view model_name,
                                           std::size_t node_count,
                                           RngStream& rng);

} // namespace redsim::cli

#endif
