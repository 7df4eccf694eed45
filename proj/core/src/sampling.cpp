#include "redsim/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace redsim {

double exponential_from_uniform(double u, double rate) {
    if (!(rate > 0.0))
        throw std::invalid_argument("exponential_from_uniform: rate must be positive");
    if (!(u > 0.0) || u >= 1.0)
        throw std::invalid_argument("exponential_from_uniform: u must lie in (0,1)");
    return -std::log(u) / rate;
}

double sample_exponential(double rate, RngStream& rng) {
    if (!(rate > 0.0))
        throw std::invalid_argument("sample_exponential: rate must be positive");
    return exponential_from_uniform(rng.uniform01(), rate);
}

double invert_cumulative_hazard(const RateBound& bound, double x) {
    if (x < 0.0)
        throw std::invalid_argument("invert_cumulative_hazard: x must be >= 0");
    switch (bound.kind()) {
    case RateBound::Kind::Constant: {
        const double c = bound.constant_rate();
        if (c <= 0.0)
            return x == 0.0 ? 0.0 : kInfiniteDelay;
        return x / c;
    }
    case RateBound::Kind::TimeVarying: {
        const TimeVaryingBound& tv = bound.time_varying_bound();
        if (tv.inverse) {
            const double t = tv.inverse(x);
            return std::isfinite(t) ? t : kInfiniteDelay;
        }
        if (tv.cumulative)
            return invert_monotone(tv.cumulative, x);
        return invert_hazard_integral(tv.hazard, x);
    }
    case RateBound::Kind::DirectSample:
        break;
    }
    throw std::invalid_argument(
        "invert_cumulative_hazard: direct-sample bounds carry no hazard");
}

DelaySample sample_delay_inversion(const RateBound& bound, RngStream& rng) {
    return sample_delay_inversion(bound, 0.0, rng);
}

DelaySample sample_delay_inversion(const RateBound& bound, double elapsed,
                                   RngStream& rng) {
    if (elapsed < 0.0)
        throw std::invalid_argument("sample_delay_inversion: negative residence");
    switch (bound.kind()) {
    case RateBound::Kind::Constant: {
        const double c = bound.constant_rate();
        if (c <= 0.0)
            return infinite_delay_sample();
        return {sample_exponential(c, rng), c};
    }
    case RateBound::Kind::TimeVarying: {
        const TimeVaryingBound& tv = bound.time_varying_bound();
        const double x = sample_exponential(1.0, rng);
        double delay = kInfiniteDelay;
        if (tv.inverse && (elapsed == 0.0 || tv.cumulative)) {
            const double base = elapsed > 0.0 ? tv.cumulative(elapsed) : 0.0;
            const double t_abs = tv.inverse(base + x);
            delay = std::isfinite(t_abs) ? std::max(0.0, t_abs - elapsed)
                                         : kInfiniteDelay;
        } else if (tv.cumulative) {
            const double base = tv.cumulative(elapsed);
            delay = invert_monotone(
                [&](double tau) { return tv.cumulative(elapsed + tau) - base; }, x);
        } else {
            delay = invert_hazard_integral(
                [&](double tau) { return tv.hazard(elapsed + tau); }, x);
        }
        if (!std::isfinite(delay))
            return infinite_delay_sample();
        double mu_hat = tv.hazard(elapsed + delay);
        if (!std::isfinite(mu_hat))
            mu_hat = kInfiniteDelay; // endpoint clamp of a diverging hazard
        return {delay, mu_hat};
    }
    case RateBound::Kind::DirectSample:
        return {bound.direct_sampler()(elapsed, rng), kInfiniteDelay};
    }
    return infinite_delay_sample();
}

double sample_delay_thinning(const std::function<double(double)>& hazard, double c,
                             RngStream& rng, double cap) {
    if (!(c > 0.0))
        throw std::invalid_argument("sample_delay_thinning: bound must be positive");
    double t = 0.0;
    for (;;) {
        t += sample_exponential(c, rng);
        if (t > cap)
            return kInfiniteDelay;
        const double h = hazard(t);
        if (h > c * (1.0 + 1e-12))
            throw std::invalid_argument(
                "sample_delay_thinning: hazard exceeds the dominating constant");
        if (h > 0.0 && rng.uniform01() * c < h)
            return t;
    }
}

double thin_against_bound(const std::function<double(double)>& hazard,
                          const RateBound& bound, double elapsed, RngStream& rng,
                          double cap) {
    switch (bound.kind()) {
    case RateBound::Kind::Constant: {
        const double c = bound.constant_rate();
        if (c <= 0.0)
            return kInfiniteDelay;
        return sample_delay_thinning(hazard, c, rng, cap);
    }
    case RateBound::Kind::TimeVarying: {
        const TimeVaryingBound& tv = bound.time_varying_bound();
        double t = 0.0;
        for (;;) {
            const double x = sample_exponential(1.0, rng);
            double step = kInfiniteDelay;
            if (tv.inverse && tv.cumulative) {
                const double t_abs = tv.inverse(tv.cumulative(elapsed + t) + x);
                step = std::isfinite(t_abs)
                           ? std::max(0.0, t_abs - elapsed - t)
                           : kInfiniteDelay;
            } else if (tv.cumulative) {
                const double base = tv.cumulative(elapsed + t);
                step = invert_monotone(
                    [&](double tau) { return tv.cumulative(elapsed + t + tau) - base; },
                    x);
            } else {
                step = invert_hazard_integral(
                    [&](double tau) { return tv.hazard(elapsed + t + tau); }, x);
            }
            if (!std::isfinite(step))
                return kInfiniteDelay;
            t += step;
            if (t > cap)
                return kInfiniteDelay;
            const double majorant = tv.hazard(elapsed + t);
            const double h = hazard(t);
            if (!std::isfinite(majorant))
                return t; // clamped at a diverging endpoint: sure firing
            if (h > majorant * (1.0 + 1e-12))
                throw std::invalid_argument(
                    "thin_against_bound: hazard exceeds the bound");
            if (h > 0.0 && rng.uniform01() * majorant < h)
                return t;
        }
    }
    case RateBound::Kind::DirectSample:
        return bound.direct_sampler()(elapsed, rng);
    }
    return kInfiniteDelay;
}

} // namespace redsim
