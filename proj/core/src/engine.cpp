#include "redsim/engine.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "redsim/errors.hpp"
#include "redsim/sampling.hpp"

namespace redsim {

EngineKind engine_from_name(std::string_view name) {
    if (name == "naive")
        return EngineKind::Naive;
    if (name == "baseline")
        return EngineKind::Baseline;
    if (name == "redsim")
        return EngineKind::RedSim;
    throw std::invalid_argument("unknown engine '" + std::string(name) +
                                "' (expected naive, baseline or redsim)");
}

std::string_view engine_name(EngineKind kind) {
    switch (kind) {
    case EngineKind::Naive:
        return "naive";
    case EngineKind::Baseline:
        return "baseline";
    case EngineKind::RedSim:
        return "redsim";
    }
    return "?";
}

SimState::SimState(const ContactNetwork& net, std::span<const StateLabel> init,
                   RngStream stream)
    : network(&net), states(init.begin(), init.end()),
      last_change(net.node_count(), 0.0), queue(net.node_count()),
      rng(std::move(stream)) {
    if (states.size() != net.node_count())
        throw std::invalid_argument(
            "SimState: initial assignment must cover every node");
}

void schedule_event(SimState& state, const AgentModel& model, NodeId agent) {
    const StateLabel s = state.states[agent];
    const RateBound bound = model.bound(s, state.network->degree(agent));
    const DelaySample ds =
        sample_delay_inversion(bound, state.residence(agent), state.rng);
    state.queue.push(agent, ds.mu_hat, state.t_global + ds.delay);
}

void schedule_event_frozen(SimState& state, const AgentModel& model, NodeId agent) {
    const StateLabel s = state.states[agent];
    const double delay = model.frozen_delay_sample(
        s, state.residence(agent), state.neighborhood(agent), state.rng);
    state.queue.push(agent, kInfiniteDelay, state.t_global + delay);
}

void schedule_all(SimState& state, const AgentModel& model) {
    for (NodeId n = 0; n < state.network->node_count(); ++n)
        schedule_event(state, model, n);
}

void schedule_all_frozen(SimState& state, const AgentModel& model) {
    for (NodeId n = 0; n < state.network->node_count(); ++n)
        schedule_event_frozen(state, model, n);
}

namespace {

void apply_transition(SimState& state, const AgentModel& model, NodeId agent,
                      StateLabel s, double residence, const NeighborView& m,
                      const TransitionObserver* observer) {
    const StateLabel next = model.transition(s, residence, m, state.rng);
    if (next != s) {
        state.states[agent] = next;
        state.last_change[agent] = state.t_global;
        if (observer && *observer)
            (*observer)(state, agent, s, next);
    }
    // A self-transition keeps T(n): the residence clock survives it.
}

} // namespace

StepOutcome redsim_step(SimState& state, const AgentModel& model,
                        const TransitionObserver* observer) {
    const Event ev = state.queue.pop();
    state.t_global = ev.t_hat;

    const NodeId agent = ev.agent;
    const StateLabel s = state.states[agent];
    const double residence = state.residence(agent);
    const NeighborView m = state.neighborhood(agent);
    const double mu = model.rate(s, residence, m);

    bool accept = true;
    if (!std::isinf(ev.mu_hat)) {
        if (mu > ev.mu_hat * (1.0 + 1e-12))
            throw BoundViolationError(agent, std::string(model.state_name(s)), mu,
                                      ev.mu_hat);
        if (mu <= 0.0)
            accept = false;
        else if (mu < ev.mu_hat)
            accept = state.rng.uniform01() * ev.mu_hat < mu;
        // mu == mu_hat: a tight bound never rejects and consumes no draw.
    }

    if (accept) {
        apply_transition(state, model, agent, s, residence, m, observer);
        ++state.counters.accepted;
    } else {
        ++state.counters.rejected;
    }

    schedule_event(state, model, agent);
    return accept ? StepOutcome::Accepted : StepOutcome::Rejected;
}

StepOutcome baseline_step(SimState& state, const AgentModel& model,
                          const TransitionObserver* observer) {
    const Event ev = state.queue.pop();
    state.t_global = ev.t_hat;

    const NodeId agent = ev.agent;
    const StateLabel s = state.states[agent];
    const double residence = state.residence(agent);
    const NeighborView m = state.neighborhood(agent);
    // Events were generated from the true effective rate, so mu equals
    // mu_hat at pop time and the firing is sure; the rate evaluation stays
    // part of the step.
    (void)model.rate(s, residence, m);

    const StateLabel before = s;
    apply_transition(state, model, agent, s, residence, m, observer);
    ++state.counters.accepted;

    schedule_event_frozen(state, model, agent);
    if (state.states[agent] != before) {
        for (NodeId neighbor : state.network->neighbors(agent)) {
            state.queue.remove(neighbor);
            schedule_event_frozen(state, model, neighbor);
        }
    }
    return StepOutcome::Accepted;
}

bool naive_step(SimState& state, const AgentModel& model, double horizon,
                const TransitionObserver* observer) {
    const double cap = horizon - state.t_global;
    if (!(cap > 0.0))
        return false;

    const std::size_t n = state.network->node_count();
    double best_delay = kInfiniteDelay;
    NodeId winner = 0;
    for (NodeId agent = 0; agent < n; ++agent) {
        const StateLabel s = state.states[agent];
        const double r0 = state.residence(agent);
        const NeighborView m = state.neighborhood(agent);
        const auto frozen_rate = [&](double t) {
            return model.rate(s, r0 + t, m.aged(t));
        };
        const double delay =
            thin_against_bound(frozen_rate, model.bound(s, m.degree()), r0,
                               state.rng, cap);
        if (delay < best_delay) {
            best_delay = delay;
            winner = agent;
        }
    }
    if (!(best_delay < cap))
        return false;

    state.t_global += best_delay;
    const StateLabel s = state.states[winner];
    const double residence = state.residence(winner);
    const NeighborView m = state.neighborhood(winner);
    apply_transition(state, model, winner, s, residence, m, observer);
    ++state.counters.accepted;
    return true;
}

namespace {

class GridRecorder {
public:
    GridRecorder(double horizon, std::size_t grid_points,
                 std::vector<std::uint32_t> initial_counts)
        : current_(std::move(initial_counts)) {
        if (horizon <= 0.0 || grid_points <= 1) {
            times_.push_back(0.0);
        } else {
            times_.resize(grid_points);
            for (std::size_t i = 0; i < grid_points; ++i)
                times_[i] = horizon * static_cast<double>(i) /
                            static_cast<double>(grid_points - 1);
        }
        counts_.reserve(times_.size());
    }

    // Record every grid time strictly before t with the pre-event counts.
    void flush_before(double t) {
        while (counts_.size() < times_.size() && times_[counts_.size()] < t)
            counts_.push_back(current_);
    }

    void on_transition(StateLabel from, StateLabel to) {
        --current_[from.index];
        ++current_[to.index];
    }

    void finish(Trajectory& out) {
        while (counts_.size() < times_.size())
            counts_.push_back(current_);
        out.times = std::move(times_);
        out.counts = std::move(counts_);
    }

private:
    std::vector<double> times_;
    std::vector<std::vector<std::uint32_t>> counts_;
    std::vector<std::uint32_t> current_;
};

std::vector<std::uint32_t> state_histogram(const AgentModel& model,
                                           std::span<const StateLabel> init) {
    std::vector<std::uint32_t> counts(model.state_count(), 0);
    for (StateLabel s : init) {
        if (s.index >= counts.size())
            throw std::invalid_argument("initial state outside the model's state set");
        ++counts[s.index];
    }
    return counts;
}

using StepFn = StepOutcome (*)(SimState&, const AgentModel&,
                               const TransitionObserver*);

Trajectory queue_driven_run(const AgentModel& model, const ContactNetwork& network,
                            std::span<const StateLabel> init, double horizon,
                            RngStream rng, std::size_t grid_points,
                            const TransitionObserver& user_observer,
                            void (*schedule)(SimState&, const AgentModel&),
                            StepFn step) {
    if (horizon < 0.0)
        throw std::invalid_argument("run: negative horizon");
    SimState state(network, init, std::move(rng));
    GridRecorder recorder(horizon, grid_points, state_histogram(model, init));

    // Counts only move on transitions, so the grid is flushed lazily: every
    // grid time strictly before a transition carries the pre-change counts.
    TransitionObserver observer = [&](const SimState& st, NodeId agent,
                                      StateLabel from, StateLabel to) {
        recorder.flush_before(st.t_global);
        recorder.on_transition(from, to);
        if (user_observer)
            user_observer(st, agent, from, to);
    };

    schedule(state, model);

    const auto start = std::chrono::steady_clock::now();
    while (!state.queue.empty()) {
        if (!(state.queue.peek().t_hat < horizon))
            break;
        step(state, model, &observer);
    }
    const auto stop = std::chrono::steady_clock::now();

    Trajectory out;
    recorder.finish(out);
    out.summary.accepted_steps = state.counters.accepted;
    out.summary.rejected_steps = state.counters.rejected;
    out.summary.elapsed_ns =
        std::chrono::duration<double, std::nano>(stop - start).count();
    return out;
}

} // namespace

Trajectory redsim_run(const AgentModel& model, const ContactNetwork& network,
                      std::span<const StateLabel> init, double horizon,
                      RngStream rng, std::size_t grid_points,
                      const TransitionObserver& observer) {
    return queue_driven_run(model, network, init, horizon, std::move(rng),
                            grid_points, observer, &schedule_all, &redsim_step);
}

Trajectory baseline_run(const AgentModel& model, const ContactNetwork& network,
                        std::span<const StateLabel> init, double horizon,
                        RngStream rng, std::size_t grid_points,
                        const TransitionObserver& observer) {
    return queue_driven_run(model, network, init, horizon, std::move(rng),
                            grid_points, observer, &schedule_all_frozen,
                            &baseline_step);
}

Trajectory naive_run(const AgentModel& model, const ContactNetwork& network,
                     std::span<const StateLabel> init, double horizon,
                     RngStream rng, std::size_t grid_points,
                     const TransitionObserver& user_observer) {
    if (horizon < 0.0)
        throw std::invalid_argument("run: negative horizon");
    SimState state(network, init, std::move(rng));
    GridRecorder recorder(horizon, grid_points, state_histogram(model, init));

    TransitionObserver observer = [&](const SimState& st, NodeId agent,
                                      StateLabel from, StateLabel to) {
        recorder.flush_before(st.t_global);
        recorder.on_transition(from, to);
        if (user_observer)
            user_observer(st, agent, from, to);
    };

    const auto start = std::chrono::steady_clock::now();
    while (naive_step(state, model, horizon, &observer)) {
    }
    const auto stop = std::chrono::steady_clock::now();

    Trajectory out;
    recorder.finish(out);
    out.summary.accepted_steps = state.counters.accepted;
    out.summary.rejected_steps = state.counters.rejected;
    out.summary.elapsed_ns =
        std::chrono::duration<double, std::nano>(stop - start).count();
    return out;
}

Trajectory run_simulation(EngineKind engine, const AgentModel& model,
                          const ContactNetwork& network,
                          std::span<const StateLabel> init, double horizon,
                          RngStream rng, std::size_t grid_points,
                          const TransitionObserver& observer) {
    switch (engine) {
    case EngineKind::Naive:
        return naive_run(model, network, init, horizon, std::move(rng),
                         grid_points, observer);
    case EngineKind::Baseline:
        return baseline_run(model, network, init, horizon, std::move(rng),
                            grid_points, observer);
    case EngineKind::RedSim:
        return redsim_run(model, network, init, horizon, std::move(rng),
                          grid_points, observer);
    }
    throw std::logic_error("run_simulation: bad engine");
}

} // namespace redsim
