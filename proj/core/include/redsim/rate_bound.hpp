#ifndef REDSIM_RATE_BOUND_HPP
#define REDSIM_RATE_BOUND_HPP

#include <functional>
#include <memory>
#include <utility>

#include "redsim/rng.hpp"

namespace redsim {

/// Time-varying rate over-approximation: a hazard of the agent's residence
/// time, its running integral, and (optionally) the closed-form inverse of
/// that integral. `cumulative` and `inverse` may be empty; missing pieces
/// are reconstructed numerically by the sampling routines.
struct TimeVaryingBound {
    std::function<double(double)> hazard;
    std::function<double(double)> cumulative;
    std::function<double(double)> inverse;
};

/// Over-approximation of an agent's instantaneous rate, valid for every
/// reachable neighborhood configuration. Three flavors:
///   - Constant(c): the bound is a constant hazard c (0 means the agent can
///     never fire and is scheduled at the +inf sentinel).
///   - TimeVarying: a residence-dependent hazard with optional closed forms.
///   - DirectSample: the delay law itself is neighborhood-independent and is
///     sampled exactly; such events are sure and skip the rejection test.
///     The sampler receives the residence already spent in the state and
///     returns the remaining delay.
class RateBound {
public:
    enum class Kind { Constant, TimeVarying, DirectSample };

    using DirectSampler = std::function<double(double elapsed, RngStream&)>;

    static RateBound constant(double c);
    static RateBound time_varying(TimeVaryingBound tv);
    static RateBound direct_sample(DirectSampler sampler);

    Kind kind() const { return kind_; }
    bool is_constant() const { return kind_ == Kind::Constant; }

    double constant_rate() const { return constant_; }
    const TimeVaryingBound& time_varying_bound() const { return *tv_; }
    const DirectSampler& direct_sampler() const { return *direct_; }

private:
    RateBound() = default;

    Kind kind_ = Kind::Constant;
    double constant_ = 0.0;
    std::shared_ptr<const TimeVaryingBound> tv_;
    std::shared_ptr<const DirectSampler> direct_;
};

} // namespace redsim

#endif
