#include "init_assignment.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace redsim::cli {

std::vector<StateLabel> initial_assignment(std::string_view model_name,
                                           std::size_t node_count,
                                           RngStream& rng) {
    std::size_t minority = 0;
    if (model_name == "sis" || model_name == "sis-fading") {
        minority = node_count == 0
                       ? 0
                       : std::max<std::size_t>(
                             1, static_cast<std::size_t>(std::llround(
                                    0.05 * static_cast<double>(node_count))));
    } else if (model_name == "voter") {
        minority = node_count / 2;
    } else {
        throw std::invalid_argument("no default initial condition for model '" +
                                    std::string(model_name) + "'");
    }

    std::vector<NodeId> order(node_count);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = node_count; i > 1; --i)
        std::swap(order[i - 1], order[rng.uniform_below(i)]);

    std::vector<StateLabel> init(node_count, StateLabel{0});
    for (std::size_t i = 0; i < minority; ++i)
        init[order[i]] = StateLabel{1};
    return init;
}

} // namespace redsim::cli
