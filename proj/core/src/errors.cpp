#include "redsim/errors.hpp"

#include <sstream>

namespace redsim {

namespace {

std::string format_bound_violation(std::uint32_t agent, const std::string& state,
                                   double rate, double bound) {
    std::ostringstream os;
    os << "rate over-approximation violated for agent " << agent << " in state '"
       << state << "': instantaneous rate " << rate << " exceeds scheduled bound "
       << bound;
    return os.str();
}

std::string format_parse_error(std::size_t line, const std::string& what) {
    std::ostringstream os;
    os << "edge list, line " << line << ": " << what;
    return os.str();
}

} // namespace

BoundViolationError::BoundViolationError(std::uint32_t agent, std::string state_name,
                                         double rate, double bound)
    : std::runtime_error(format_bound_violation(agent, state_name, rate, bound)),
      agent_(agent),
      state_name_(std::move(state_name)),
      rate_(rate),
      bound_(bound) {}

EdgeListParseError::EdgeListParseError(std::size_t line, const std::string& what)
    : std::runtime_error(format_parse_error(line, what)), line_(line) {}

} // namespace redsim
