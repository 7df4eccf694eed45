#ifndef REDSIM_MODEL_HPP
#define REDSIM_MODEL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "redsim/rate_bound.hpp"
#include "redsim/rng.hpp"

namespace redsim {

using NodeId = std::uint32_t;

/// Index into a model's finite local-state set.
struct StateLabel {
    std::uint8_t index = 0;

    friend bool operator==(StateLabel a, StateLabel b) { return a.index == b.index; }
    friend bool operator!=(StateLabel a, StateLabel b) { return a.index != b.index; }
};

/// One neighbor as seen by a rate/transition evaluation.
struct Neighbor {
    StateLabel state;
    double residence;
};

/// Lazy view of an agent's neighborhood: (state, residence) per graph
/// neighbor, computed from the engine's node arrays at evaluation time.
/// `age` shifts every residence forward, which expresses the
/// frozen-neighborhood convention where all agents keep their state while
/// their clocks advance.
class NeighborView {
public:
    NeighborView(std::span<const NodeId> ids, const StateLabel* states,
                 const double* last_change, double now, double age = 0.0)
        : ids_(ids), states_(states), last_change_(last_change), now_(now),
          age_(age) {}

    std::size_t degree() const { return ids_.size(); }

    Neighbor operator[](std::size_t i) const {
        const NodeId id = ids_[i];
        return {states_[id], now_ - last_change_[id] + age_};
    }

    NeighborView aged(double extra) const {
        return NeighborView(ids_, states_, last_change_, now_, age_ + extra);
    }

    class iterator {
    public:
        iterator(const NeighborView* view, std::size_t i) : view_(view), i_(i) {}
        Neighbor operator*() const { return (*view_)[i_]; }
        iterator& operator++() { ++i_; return *this; }
        bool operator!=(const iterator& o) const { return i_ != o.i_; }

    private:
        const NeighborView* view_;
        std::size_t i_;
    };

    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, ids_.size()); }

private:
    std::span<const NodeId> ids_;
    const StateLabel* states_;
    const double* last_change_;
    double now_;
    double age_;
};

/// Behavior bundle of a multi-agent model: the instantaneous rate of an
/// agent, the transition kernel fired on events, and a rate
/// over-approximation valid for every reachable neighborhood. Stateless and
/// read-only after construction, so one instance serves any number of
/// concurrent replications.
class AgentModel {
public:
    virtual ~AgentModel() = default;

    virtual std::string_view name() const = 0;
    virtual std::size_t state_count() const = 0;
    virtual std::string_view state_name(StateLabel s) const = 0;

    std::vector<StateLabel> state_set() const;

    /// Instantaneous rate of firing given the agent's state, the time spent
    /// in it, and the neighborhood.
    virtual double rate(StateLabel s, double residence,
                        const NeighborView& neighbors) const = 0;

    /// One draw from the transition kernel.
    virtual StateLabel transition(StateLabel s, double residence,
                                  const NeighborView& neighbors,
                                  RngStream& rng) const = 0;

    /// Rate over-approximation for an agent of the given degree, as a
    /// function of residence time. Must dominate rate() for every reachable
    /// neighborhood configuration.
    virtual RateBound bound(StateLabel s, std::size_t degree) const = 0;

    /// Exact transition kernel when one is available in closed form;
    /// std::nullopt for models that can only sample. Consumed by the CTMC
    /// oracle.
    virtual std::optional<std::vector<double>>
    transition_probabilities(StateLabel s, double residence,
                             const NeighborView& neighbors) const;

    /// Remaining delay drawn from the frozen-neighborhood effective rate:
    /// the law of the next firing assuming every neighbor keeps its state
    /// while all clocks advance. Returns +inf for defective delays. The
    /// default integrates the aged rate numerically; models override it with
    /// closed forms.
    virtual double frozen_delay_sample(StateLabel s, double residence,
                                       const NeighborView& neighbors,
                                       RngStream& rng) const;
};

/// Markovian susceptible-infected-susceptible dynamics: infection at
/// `infection_rate` per infected neighbor, recovery at `recovery_rate`.
std::unique_ptr<AgentModel> sis_markovian(double infection_rate,
                                          double recovery_rate);

/// SIS dynamics with fading infectiousness: an infected neighbor at
/// residence r attacks at attack_rate * exp(-attack_rate * r); recovery
/// delays are uniform on [0,1] and sampled directly.
std::unique_ptr<AgentModel> sis_fading(double attack_rate);

/// Two-opinion voter dynamics with Weibull switching: an agent whose
/// opposing-neighbor fraction is u switches with hazard
/// c * u * (t*u)^(c-1), shape c per opinion.
std::unique_ptr<AgentModel> voter_weibull(double shape_a, double shape_b);

/// Name-based factory ("sis", "sis-fading", "voter") with per-model numeric
/// parameters; unknown names or parameters are rejected.
std::unique_ptr<AgentModel> make_model(
    std::string_view name, const std::vector<std::pair<std::string, double>>& params);

} // namespace redsim

#endif
