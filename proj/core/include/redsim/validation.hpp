#ifndef REDSIM_VALIDATION_HPP
#define REDSIM_VALIDATION_HPP

#include <functional>
#include <span>
#include <vector>

#include "redsim/model.hpp"
#include "redsim/network.hpp"

namespace redsim {

/// Kolmogorov-Smirnov sup-distance with the asymptotic critical value
/// c(alpha) * sqrt((m+n)/(m*n)) (one-sample: c(alpha)/sqrt(n)),
/// c(0.01) ~ 1.628.
struct KsResult {
    double statistic = 0.0;
    std::size_t n1 = 0;
    std::size_t n2 = 0; // 0 for one-sample tests
    double alpha = 0.0;
    double critical_value = 0.0;
    bool reject = false;
};

KsResult ks_one_sample(std::vector<double> samples,
                       const std::function<double(double)>& exact_cdf,
                       double alpha = 0.01);

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b,
                       double alpha = 0.01);

/// Exact transient distributions of the Markovian special case by
/// uniformization over the full |S|^n configuration space (capped at 4096
/// configurations). Requires a model whose rates are residence-independent
/// (probed at two residences) and which exposes its transition kernel in
/// closed form. Oracle for statistical engine tests; pure and reentrant
/// after construction.
class CtmcTransient {
public:
    CtmcTransient(const AgentModel& model, const ContactNetwork& network);

    std::size_t config_count() const { return rows_.size(); }

    std::size_t encode(std::span<const StateLabel> states) const;

    /// Distribution over configurations at time t, truncation tail below
    /// `tail_tol`.
    std::vector<double> transient(std::span<const StateLabel> init, double t,
                                  double tail_tol = 1e-10) const;

    /// Expected number of agents in state s under a configuration
    /// distribution.
    double mean_count(std::span<const double> distribution, StateLabel s) const;

    /// Probability of exactly the given configuration.
    double probability_of(std::span<const double> distribution,
                          std::span<const StateLabel> states) const;

private:
    struct Transition {
        std::size_t target;
        double rate;
    };

    std::size_t node_count_ = 0;
    std::size_t state_count_ = 0;
    std::vector<std::vector<Transition>> rows_;
    std::vector<double> exit_rates_;
};

/// Convenience wrapper: transient configuration distribution at time t.
std::vector<double> ctmc_transient(const AgentModel& model,
                                   const ContactNetwork& network,
                                   std::span<const StateLabel> init, double t);

} // namespace redsim

#endif
