#ifndef REDSIM_ENGINE_HPP
#define REDSIM_ENGINE_HPP

#include <functional>
#include <span>
#include <string_view>

#include "redsim/event_queue.hpp"
#include "redsim/model.hpp"
#include "redsim/network.hpp"
#include "redsim/rng.hpp"
#include "redsim/trajectory.hpp"

namespace redsim {

enum class StepOutcome { Accepted, Rejected };

enum class EngineKind { Naive, Baseline, RedSim };

EngineKind engine_from_name(std::string_view name);
std::string_view engine_name(EngineKind kind);

struct StepCounters {
    std::uint64_t accepted = 0;
    std::uint64_t rejected = 0;
};

/// Mutable per-replication simulation state: the labeled graph (states S and
/// last-change times T), the global clock, the event queue and the RNG
/// stream. Residence times are always derived as t_global - T(n). One
/// SimState per replication, never shared.
struct SimState {
    SimState(const ContactNetwork& network, std::span<const StateLabel> init,
             RngStream rng);

    const ContactNetwork* network;
    std::vector<StateLabel> states;
    std::vector<double> last_change;
    double t_global = 0.0;
    EventQueue queue;
    RngStream rng;
    StepCounters counters;

    double residence(NodeId n) const { return t_global - last_change[n]; }

    NeighborView neighborhood(NodeId n) const {
        return NeighborView(network->neighbors(n), states.data(),
                            last_change.data(), t_global);
    }
};

/// Called on every accepted state change, after it has been applied.
using TransitionObserver =
    std::function<void(const SimState&, NodeId, StateLabel from, StateLabel to)>;

/// Schedules the next event for `agent` from its rate over-approximation:
/// constant bounds draw an exponential delay, time-varying bounds invert the
/// cumulative bound hazard conditioned on the residence already spent (the
/// bound's time origin is the agent's last state change), direct-sample
/// bounds draw the exact delay and mark the event sure. A zero bound pushes
/// the +inf sentinel. The agent must not have a pending event.
void schedule_event(SimState& state, const AgentModel& model, NodeId agent);

/// Schedules the next event for `agent` from the true frozen-neighborhood
/// effective rate (rejection-free engine). The event is sure by
/// construction.
void schedule_event_frozen(SimState& state, const AgentModel& model, NodeId agent);

/// One event per agent, bound-driven (rejection engine initialization).
void schedule_all(SimState& state, const AgentModel& model);

/// One event per agent, frozen-rate-driven (rejection-free initialization).
void schedule_all_frozen(SimState& state, const AgentModel& model);

/// One step of the rejection engine: pop the earliest event, advance the
/// clock, evaluate the true rate mu against the current neighborhood, reject
/// with probability 1 - mu/mu_hat, otherwise draw the next state (resetting
/// the last-change time only on a real change) and always reschedule exactly
/// one event for the popped agent. Neighbor events are never touched.
/// The queue must be non-empty with a finite head. Throws
/// BoundViolationError if mu exceeds mu_hat beyond 1e-12 relative slack.
StepOutcome redsim_step(SimState& state, const AgentModel& model,
                        const TransitionObserver* observer = nullptr);

/// One step of the rejection-free engine: identical to redsim_step except
/// that events carry the true effective rate (acceptance probability 1) and
/// a state change removes and regenerates every neighbor's pending event.
StepOutcome baseline_step(SimState& state, const AgentModel& model,
                          const TransitionObserver* observer = nullptr);

/// One step of the naive reference engine: a fresh candidate delay is drawn
/// for every agent by thinning its frozen-neighborhood rate against the
/// model bound, the minimum fires. Returns false when no agent fires before
/// `horizon` (the run is over). Cost is O(n) per step; oracle use only.
bool naive_step(SimState& state, const AgentModel& model, double horizon,
                const TransitionObserver* observer = nullptr);

/// Full runs: initialize T(n) = 0 and one event per agent, iterate steps
/// until the next event time reaches `horizon`, and sample per-state counts
/// on a uniform `grid_points`-point grid over [0, horizon].
Trajectory redsim_run(const AgentModel& model, const ContactNetwork& network,
                      std::span<const StateLabel> init, double horizon,
                      RngStream rng, std::size_t grid_points,
                      const TransitionObserver& observer = {});

Trajectory baseline_run(const AgentModel& model, const ContactNetwork& network,
                        std::span<const StateLabel> init, double horizon,
                        RngStream rng, std::size_t grid_points,
                        const TransitionObserver& observer = {});

Trajectory naive_run(const AgentModel& model, const ContactNetwork& network,
                     std::span<const StateLabel> init, double horizon,
                     RngStream rng, std::size_t grid_points,
                     const TransitionObserver& observer = {});

Trajectory run_simulation(EngineKind engine, const AgentModel& model,
                          const ContactNetwork& network,
                          std::span<const StateLabel> init, double horizon,
                          RngStream rng, std::size_t grid_points,
                          const TransitionObserver& observer = {});

} // namespace redsim

#endif
