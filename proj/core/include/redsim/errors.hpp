#ifndef REDSIM_ERRORS_HPP
#define REDSIM_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace redsim {

/// The true instantaneous rate of an agent exceeded its scheduled
/// over-approximation. Always a defect in the model's bound, never noise;
/// simulations abort on it.
class BoundViolationError : public std::runtime_error {
public:
    BoundViolationError(std::uint32_t agent, std::string state_name,
                        double rate, double bound);

    std::uint32_t agent() const { return agent_; }
    const std::string& state_name() const { return state_name_; }
    double rate() const { return rate_; }
    double bound() const { return bound_; }

private:
    std::uint32_t agent_;
    std::string state_name_;
    double rate_;
    double bound_;
};

/// Malformed edge-list input; carries the 1-based offending line.
class EdgeListParseError : public std::runtime_error {
public:
    EdgeListParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace redsim

#endif
