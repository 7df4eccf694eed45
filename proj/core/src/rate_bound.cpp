#include "redsim/rate_bound.hpp"

#include <stdexcept>

namespace redsim {

RateBound RateBound::constant(double c) {
    if (c < 0.0)
        throw std::invalid_argument("RateBound: constant bound must be >= 0");
    RateBound b;
    b.kind_ = Kind::Constant;
    b.constant_ = c;
    return b;
}

RateBound RateBound::time_varying(TimeVaryingBound tv) {
    if (!tv.hazard)
        throw std::invalid_argument("RateBound: time-varying bound needs a hazard");
    RateBound b;
    b.kind_ = Kind::TimeVarying;
    b.tv_ = std::make_shared<const TimeVaryingBound>(std::move(tv));
    return b;
}

RateBound RateBound::direct_sample(DirectSampler sampler) {
    if (!sampler)
        throw std::invalid_argument("RateBound: direct-sample bound needs a sampler");
    RateBound b;
    b.kind_ = Kind::DirectSample;
    b.direct_ = std::make_shared<const DirectSampler>(std::move(sampler));
    return b;
}

} // namespace redsim
