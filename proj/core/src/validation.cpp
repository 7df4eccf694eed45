#include "redsim/validation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace redsim {

namespace {

double ks_coefficient(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("ks: significance must lie in (0,1)");
    return std::sqrt(-0.5 * std::log(alpha / 2.0));
}

} // namespace

KsResult ks_one_sample(std::vector<double> samples,
                       const std::function<double(double)>& exact_cdf,
                       double alpha) {
    if (samples.empty())
        throw std::invalid_argument("ks_one_sample: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = exact_cdf(samples[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    KsResult r;
    r.statistic = d;
    r.n1 = samples.size();
    r.alpha = alpha;
    r.critical_value = ks_coefficient(alpha) / std::sqrt(n);
    r.reject = d > r.critical_value;
    return r;
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b, double alpha) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x)
            ++i;
        while (j < b.size() && b[j] <= x)
            ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na -
                                  static_cast<double>(j) / nb));
    }
    KsResult r;
    r.statistic = d;
    r.n1 = a.size();
    r.n2 = b.size();
    r.alpha = alpha;
    r.critical_value = ks_coefficient(alpha) * std::sqrt((na + nb) / (na * nb));
    r.reject = d > r.critical_value;
    return r;
}

CtmcTransient::CtmcTransient(const AgentModel& model,
                             const ContactNetwork& network)
    : node_count_(network.node_count()), state_count_(model.state_count()) {
    std::size_t configs = 1;
    for (std::size_t i = 0; i < node_count_; ++i) {
        configs *= state_count_;
        if (configs > 4096)
            throw std::invalid_argument(
                "CtmcTransient: configuration space exceeds 4096");
    }

    rows_.resize(configs);
    exit_rates_.assign(configs, 0.0);

    std::vector<StateLabel> states(node_count_);
    std::vector<double> last_change(node_count_, 0.0);
    // Two residence probes; Markovian rates and kernels must not move.
    const double probe_a = 0.3;
    const double probe_b = 1.7;

    for (std::size_t c = 0; c < configs; ++c) {
        std::size_t rem = c;
        for (std::size_t i = 0; i < node_count_; ++i) {
            states[i].index = static_cast<std::uint8_t>(rem % state_count_);
            rem /= state_count_;
        }
        std::size_t stride = 1;
        for (NodeId n = 0; n < node_count_; ++n, stride *= state_count_) {
            const NeighborView view_a(network.neighbors(n), states.data(),
                                      last_change.data(), probe_a);
            const NeighborView view_b(network.neighbors(n), states.data(),
                                      last_change.data(), probe_b);
            const double rate_a = model.rate(states[n], probe_a, view_a);
            const double rate_b = model.rate(states[n], probe_b, view_b);
            if (rate_a != rate_b)
                throw std::invalid_argument(
                    "CtmcTransient: model rates depend on residence time");
            if (rate_a <= 0.0)
                continue;
            const auto kernel_a =
                model.transition_probabilities(states[n], probe_a, view_a);
            const auto kernel_b =
                model.transition_probabilities(states[n], probe_b, view_b);
            if (!kernel_a || !kernel_b)
                throw std::invalid_argument(
                    "CtmcTransient: model exposes no closed-form kernel");
            if (*kernel_a != *kernel_b)
                throw std::invalid_argument(
                    "CtmcTransient: transition kernel depends on residence time");
            for (std::size_t target = 0; target < state_count_; ++target) {
                if (target == states[n].index)
                    continue; // self-transitions do not move the chain
                const double p = (*kernel_a)[target];
                if (p <= 0.0)
                    continue;
                const std::ptrdiff_t shift =
                    (static_cast<std::ptrdiff_t>(target) - states[n].index) *
                    static_cast<std::ptrdiff_t>(stride);
                const std::size_t to = static_cast<std::size_t>(
                    static_cast<std::ptrdiff_t>(c) + shift);
                rows_[c].push_back({to, rate_a * p});
                exit_rates_[c] += rate_a * p;
            }
        }
    }
}

std::size_t CtmcTransient::encode(std::span<const StateLabel> states) const {
    if (states.size() != node_count_)
        throw std::invalid_argument("CtmcTransient: wrong configuration length");
    std::size_t c = 0;
    for (std::size_t i = node_count_; i-- > 0;)
        c = c * state_count_ + states[i].index;
    return c;
}

std::vector<double> CtmcTransient::transient(std::span<const StateLabel> init,
                                             double t, double tail_tol) const {
    const std::size_t configs = rows_.size();
    std::vector<double> result(configs, 0.0);
    std::vector<double> v(configs, 0.0);
    v[encode(init)] = 1.0;

    double uni_rate = 0.0;
    for (double q : exit_rates_)
        uni_rate = std::max(uni_rate, q);
    if (uni_rate <= 0.0 || t <= 0.0) {
        return v; // absorbing chain or zero horizon: nothing moves
    }
    const double lt = uni_rate * t;
    if (lt > 600.0)
        throw std::invalid_argument(
            "CtmcTransient: horizon too large for the uniformization weights");

    double weight = std::exp(-lt);
    double cumulative = weight;
    for (std::size_t i = 0; i < configs; ++i)
        result[i] = weight * v[i];

    std::vector<double> next(configs, 0.0);
    for (std::size_t k = 1; cumulative < 1.0 - tail_tol; ++k) {
        if (k > 2000000)
            throw std::runtime_error("CtmcTransient: truncation ran away");
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t c = 0; c < configs; ++c) {
            const double mass = v[c];
            if (mass == 0.0)
                continue;
            next[c] += mass * (1.0 - exit_rates_[c] / uni_rate);
            for (const Transition& tr : rows_[c])
                next[tr.target] += mass * (tr.rate / uni_rate);
        }
        v.swap(next);
        weight *= lt / static_cast<double>(k);
        cumulative += weight;
        for (std::size_t i = 0; i < configs; ++i)
            result[i] += weight * v[i];
    }
    return result;
}

double CtmcTransient::mean_count(std::span<const double> distribution,
                                 StateLabel s) const {
    if (distribution.size() != rows_.size())
        throw std::invalid_argument("CtmcTransient: wrong distribution length");
    double mean = 0.0;
    for (std::size_t c = 0; c < distribution.size(); ++c) {
        std::size_t rem = c;
        std::size_t count = 0;
        for (std::size_t i = 0; i < node_count_; ++i) {
            count += (rem % state_count_) == s.index;
            rem /= state_count_;
        }
        mean += distribution[c] * static_cast<double>(count);
    }
    return mean;
}

double CtmcTransient::probability_of(std::span<const double> distribution,
                                     std::span<const StateLabel> states) const {
    return distribution[encode(states)];
}

std::vector<double> ctmc_transient(const AgentModel& model,
                                   const ContactNetwork& network,
                                   std::span<const StateLabel> init, double t) {
    return CtmcTransient(model, network).transient(init, t);
}

} // namespace redsim
