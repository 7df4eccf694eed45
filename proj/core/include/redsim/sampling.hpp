#ifndef REDSIM_SAMPLING_HPP
#define REDSIM_SAMPLING_HPP

#include <functional>

#include "redsim/quadrature.hpp"
#include "redsim/rate_bound.hpp"
#include "redsim/rng.hpp"

namespace redsim {

/// A sampled time delay together with the bound hazard evaluated at the
/// firing point. mu_hat == +inf marks a sure firing (the delay was drawn
/// from the exact delay law); mu_hat == 0 only accompanies the +inf
/// sentinel delay of an agent that cannot fire.
struct DelaySample {
    double delay = kInfiniteDelay;
    double mu_hat = 0.0;
};

inline DelaySample infinite_delay_sample() { return {kInfiniteDelay, 0.0}; }

/// Inverse-CDF transform for a unit-uniform variate, -log(u)/rate.
double exponential_from_uniform(double u, double rate);

/// One exponential draw with the given rate (> 0, else std::invalid_argument).
double sample_exponential(double rate, RngStream& rng);

/// Solves the cumulative bound hazard for the point where its area reaches x:
/// returns t with integral_0^t lambda_hat = x, using the closed-form inverse
/// when the bound carries one, a monotone root-find over the closed-form
/// cumulative otherwise, and panel-stepping quadrature over the hazard as the
/// last resort. Returns +inf when the total mass stays below x.
double invert_cumulative_hazard(const RateBound& bound, double x);

/// Inversion sampling of the delay governed by the bound hazard: draws
/// x ~ Exp(1) and inverts the cumulative hazard. The two-argument overload
/// conditions on `elapsed` residence already spent in the state: the hazard
/// integral starts at `elapsed` and the returned delay is the remaining time.
DelaySample sample_delay_inversion(const RateBound& bound, RngStream& rng);
DelaySample sample_delay_inversion(const RateBound& bound, double elapsed,
                                   RngStream& rng);

/// Thinning against a constant dominating rate c: candidate arrival times
/// accumulate Exp(c) increments and each candidate t is accepted with
/// probability hazard(t)/c. Throws BoundViolationError-style
/// std::invalid_argument if a candidate evaluation exceeds c. `cap`, when
/// finite, truncates the search: candidates beyond it return +inf.
double sample_delay_thinning(const std::function<double(double)>& hazard, double c,
                             RngStream& rng, double cap = kInfiniteDelay);

/// Thinning of `hazard` (a function of the delay from now) against an
/// arbitrary rate bound whose time origin sits `elapsed` residence units in
/// the past. Candidates are generated from the bound process and accepted
/// with probability hazard/bound. Used by the reference engine, where the
/// bound is the model's over-approximation.
double thin_against_bound(const std::function<double(double)>& hazard,
                          const RateBound& bound, double elapsed, RngStream& rng,
                          double cap = kInfiniteDelay);

} // namespace redsim

#endif
