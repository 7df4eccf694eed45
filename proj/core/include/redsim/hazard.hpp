#ifndef REDSIM_HAZARD_HPP
#define REDSIM_HAZARD_HPP

#include <functional>

#include "redsim/quadrature.hpp"

namespace redsim {

/// Support interval of a delay distribution; hi may be +inf.
struct Support {
    double lo = 0.0;
    double hi = kInfiniteDelay;
};

/// A time-delay distribution in renewal form: density gamma, hazard lambda
/// and cumulative hazard Lambda are mutually consistent,
///   lambda(t) = gamma(t) / (1 - int_0^t gamma)   and
///   gamma(t)  = lambda(t) * exp(-Lambda(t)),
/// with the hazard defined as 0 wherever the survival denominator vanishes.
struct DelayDistribution {
    std::function<double(double)> density;
    std::function<double(double)> hazard;
    std::function<double(double)> cumulative_hazard;
    Support support;
};

/// Builds the renewal-form distribution from a normalized density. Rejects
/// densities whose total mass deviates from 1 beyond quadrature tolerance.
DelayDistribution hazard_from_density(std::function<double(double)> density,
                                      Support support = {});

/// Builds the renewal-form distribution from a locally integrable hazard.
DelayDistribution density_from_hazard(std::function<double(double)> hazard,
                                      Support support = {});

} // namespace redsim

#endif
