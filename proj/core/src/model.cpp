#include "redsim/model.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "redsim/quadrature.hpp"
#include "redsim/sampling.hpp"

namespace redsim {

std::vector<StateLabel> AgentModel::state_set() const {
    std::vector<StateLabel> states(state_count());
    for (std::size_t i = 0; i < states.size(); ++i)
        states[i].index = static_cast<std::uint8_t>(i);
    return states;
}

std::optional<std::vector<double>>
AgentModel::transition_probabilities(StateLabel, double, const NeighborView&) const {
    return std::nullopt;
}

double AgentModel::frozen_delay_sample(StateLabel s, double residence,
                                       const NeighborView& neighbors,
                                       RngStream& rng) const {
    const double x = sample_exponential(1.0, rng);
    return invert_hazard_integral(
        [&](double t) { return rate(s, residence + t, neighbors.aged(t)); }, x);
}

namespace {

constexpr StateLabel kState0{0};
constexpr StateLabel kState1{1};

StateLabel flipped(StateLabel s) { return s == kState0 ? kState1 : kState0; }

std::vector<double> one_hot(std::size_t states, StateLabel s) {
    std::vector<double> p(states, 0.0);
    p[s.index] = 1.0;
    return p;
}

class MarkovianSis final : public AgentModel {
public:
    MarkovianSis(double infection_rate, double recovery_rate)
        : infection_rate_(infection_rate), recovery_rate_(recovery_rate) {
        if (infection_rate < 0.0 || recovery_rate < 0.0)
            throw std::invalid_argument("sis: rate constants must be >= 0");
    }

    std::string_view name() const override { return "sis"; }
    std::size_t state_count() const override { return 2; }
    std::string_view state_name(StateLabel s) const override {
        return s == kState0 ? "S" : "I";
    }

    double rate(StateLabel s, double, const NeighborView& m) const override {
        if (s == kState1)
            return recovery_rate_;
        std::size_t infected = 0;
        for (const Neighbor& nb : m)
            infected += nb.state == kState1;
        return infection_rate_ * static_cast<double>(infected);
    }

    StateLabel transition(StateLabel s, double, const NeighborView&,
                          RngStream&) const override {
        return flipped(s);
    }

    RateBound bound(StateLabel s, std::size_t degree) const override {
        if (s == kState1)
            return RateBound::constant(recovery_rate_);
        return RateBound::constant(static_cast<double>(degree) * infection_rate_);
    }

    std::optional<std::vector<double>>
    transition_probabilities(StateLabel s, double, const NeighborView&) const override {
        return one_hot(2, flipped(s));
    }

    double frozen_delay_sample(StateLabel s, double residence,
                               const NeighborView& m, RngStream& rng) const override {
        const double r = rate(s, residence, m);
        if (r <= 0.0)
            return kInfiniteDelay;
        return sample_exponential(r, rng);
    }

private:
    double infection_rate_;
    double recovery_rate_;
};

class FadingSis final : public AgentModel {
public:
    explicit FadingSis(double attack_rate) : attack_rate_(attack_rate) {
        if (!(attack_rate > 0.0))
            throw std::invalid_argument("sis-fading: attack rate must be > 0");
        recovery_bound_ = RateBound::direct_sample(
            [](double elapsed, RngStream& rng) {
                // Uniform [0,1] total delay, conditioned on the residence
                // already spent.
                const double remaining = 1.0 - elapsed;
                return remaining > 0.0 ? remaining * rng.uniform01() : 0.0;
            });
    }

    std::string_view name() const override { return "sis-fading"; }
    std::size_t state_count() const override { return 2; }
    std::string_view state_name(StateLabel s) const override {
        return s == kState0 ? "S" : "I";
    }

    double rate(StateLabel s, double residence, const NeighborView& m) const override {
        if (s == kState1)
            return residence < 1.0 ? 1.0 / (1.0 - residence) : 0.0;
        double sum = 0.0;
        for (const Neighbor& nb : m)
            if (nb.state == kState1)
                sum += attack_rate_ * std::exp(-attack_rate_ * nb.residence);
        return sum;
    }

    StateLabel transition(StateLabel s, double, const NeighborView&,
                          RngStream&) const override {
        return flipped(s);
    }

    RateBound bound(StateLabel s, std::size_t degree) const override {
        if (s == kState1)
            return recovery_bound_;
        return RateBound::constant(static_cast<double>(degree) * attack_rate_);
    }

    std::optional<std::vector<double>>
    transition_probabilities(StateLabel s, double, const NeighborView&) const override {
        return one_hot(2, flipped(s));
    }

    double frozen_delay_sample(StateLabel s, double residence,
                               const NeighborView& m, RngStream& rng) const override {
        if (s == kState1) {
            const double remaining = 1.0 - residence;
            return remaining > 0.0 ? remaining * rng.uniform01() : 0.0;
        }
        // Frozen infection pressure decays jointly: Lambda(t) = A(1-e^{-ut})
        // with A the current pressure sum, so the delay is defective with
        // survival e^{-A}.
        double pressure = 0.0;
        for (const Neighbor& nb : m)
            if (nb.state == kState1)
                pressure += std::exp(-attack_rate_ * nb.residence);
        if (pressure <= 0.0)
            return kInfiniteDelay;
        const double x = sample_exponential(1.0, rng);
        if (x >= pressure)
            return kInfiniteDelay;
        return -std::log(1.0 - x / pressure) / attack_rate_;
    }

private:
    double attack_rate_;
    RateBound recovery_bound_ = RateBound::constant(0.0);
};

class WeibullVoter final : public AgentModel {
public:
    WeibullVoter(double shape_a, double shape_b)
        : shape_{shape_a, shape_b} {
        if (!(shape_a >= 1.0) || !(shape_b >= 1.0))
            throw std::invalid_argument("voter: shape parameters must be >= 1");
        for (int i = 0; i < 2; ++i) {
            const double c = shape_[i];
            bounds_[i] = RateBound::time_varying(TimeVaryingBound{
                [c](double t) { return c * std::pow(t, c - 1.0); },
                [c](double t) { return std::pow(t, c); },
                [c](double x) { return std::pow(x, 1.0 / c); }});
        }
    }

    std::string_view name() const override { return "voter"; }
    std::size_t state_count() const override { return 2; }
    std::string_view state_name(StateLabel s) const override {
        return s == kState0 ? "A" : "B";
    }

    double rate(StateLabel s, double residence, const NeighborView& m) const override {
        const double u = opposing_fraction(s, m);
        if (u <= 0.0)
            return 0.0;
        const double c = shape_[s.index];
        return c * u * std::pow(residence * u, c - 1.0);
    }

    StateLabel transition(StateLabel s, double, const NeighborView&,
                          RngStream&) const override {
        return flipped(s);
    }

    RateBound bound(StateLabel s, std::size_t degree) const override {
        if (degree == 0)
            return RateBound::constant(0.0); // never opposed, never fires
        return bounds_[s.index];
    }

    std::optional<std::vector<double>>
    transition_probabilities(StateLabel s, double, const NeighborView&) const override {
        return one_hot(2, flipped(s));
    }

    // frozen_delay_sample is deliberately NOT overridden: switching delays
    // are the costly-sampling case, so the rejection-free engine pays the
    // generic numeric integration of the frozen rate here.

private:
    double opposing_fraction(StateLabel s, const NeighborView& m) const {
        const std::size_t k = m.degree();
        if (k == 0)
            return 0.0;
        std::size_t opposing = 0;
        for (const Neighbor& nb : m)
            opposing += nb.state != s;
        return static_cast<double>(opposing) / static_cast<double>(k);
    }

    double shape_[2];
    RateBound bounds_[2] = {RateBound::constant(0.0), RateBound::constant(0.0)};
};

double take_param(const std::vector<std::pair<std::string, double>>& params,
                  const std::string& key, double fallback) {
    for (const auto& [k, v] : params)
        if (k == key)
            return v;
    return fallback;
}

void check_param_names(const std::vector<std::pair<std::string, double>>& params,
                       std::initializer_list<std::string_view> known) {
    for (const auto& [k, v] : params) {
        bool ok = false;
        for (std::string_view name : known)
            ok = ok || k == name;
        if (!ok)
            throw std::invalid_argument("unknown model parameter '" + k + "'");
    }
}

} // namespace

std::unique_ptr<AgentModel> sis_markovian(double infection_rate,
                                          double recovery_rate) {
    return std::make_unique<MarkovianSis>(infection_rate, recovery_rate);
}

std::unique_ptr<AgentModel> sis_fading(double attack_rate) {
    return std::make_unique<FadingSis>(attack_rate);
}

std::unique_ptr<AgentModel> voter_weibull(double shape_a, double shape_b) {
    return std::make_unique<WeibullVoter>(shape_a, shape_b);
}

std::unique_ptr<AgentModel> make_model(
    std::string_view name,
    const std::vector<std::pair<std::string, double>>& params) {
    if (name == "sis") {
        check_param_names(params, {"ci", "cr"});
        return sis_markovian(take_param(params, "ci", 1.0),
                             take_param(params, "cr", 1.0));
    }
    if (name == "sis-fading") {
        check_param_names(params, {"u"});
        return sis_fading(take_param(params, "u", 0.4));
    }
    if (name == "voter") {
        check_param_names(params, {"ca", "cb"});
        return voter_weibull(take_param(params, "ca", 2.0),
                             take_param(params, "cb", 2.05));
    }
    throw std::invalid_argument("unknown model '" + std::string(name) +
                                "' (expected sis, sis-fading or voter)");
}

} // namespace redsim
