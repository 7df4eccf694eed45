#ifndef REDSIM_EVENT_QUEUE_HPP
#define REDSIM_EVENT_QUEUE_HPP

#include <cstdint>
#include <vector>

#include "redsim/model.hpp"

namespace redsim {

/// A scheduled firing: the agent, the rate over-approximation at the firing
/// point, and the absolute firing time. mu_hat == +inf marks a sure firing
/// (delay drawn from the exact delay law, rejection test skipped);
/// t_hat == +inf is the sentinel of an agent that cannot fire.
struct Event {
    NodeId agent = 0;
    double mu_hat = 0.0;
    double t_hat = 0.0;
    std::uint64_t seq = 0;
};

/// Binary min-heap on (t_hat, seq) with an agent-id index supporting
/// removal. The rejection engine holds exactly one event per agent and only
/// pushes/pops; the rejection-free engine additionally removes neighbor
/// events to regenerate them. Ties in t_hat break by insertion sequence, so
/// replay is deterministic.
class EventQueue {
public:
    explicit EventQueue(std::size_t node_count);

    void push(NodeId agent, double mu_hat, double t_hat);
    Event pop();
    const Event& peek() const;

    bool contains(NodeId agent) const;
    bool remove(NodeId agent);

    std::size_t size() const { return heap_.size(); }
    bool empty() const { return heap_.empty(); }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool before(const Event& a, const Event& b) const;
    void sift_up(std::size_t i);
    void sift_down(std::size_t i);
    void place(std::size_t i, const Event& e);

    std::vector<Event> heap_;
    std::vector<std::size_t> position_; // agent id -> heap slot or npos
    std::uint64_t next_seq_ = 0;
};

} // namespace redsim

#endif
