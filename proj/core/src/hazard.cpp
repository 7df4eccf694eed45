#include "redsim/hazard.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace redsim {

namespace {

constexpr double kQuadTol = 1e-14;
constexpr int kQuadDepth = 45;

// Integral of f over [lo, hi] where hi may be +inf: doubling panels until
// the tail stops contributing.
double integrate_full(const std::function<double(double)>& f, double lo, double hi) {
    if (std::isfinite(hi))
        return adaptive_simpson(f, lo, hi, kQuadTol, kQuadDepth);
    double total = 0.0;
    double t = lo;
    double step = 0.25;
    int stall = 0;
    for (int panel = 0; panel < 220; ++panel) {
        const double seg = adaptive_simpson(f, t, t + step, kQuadTol, kQuadDepth);
        if (!std::isfinite(seg))
            return seg;
        total += seg;
        stall = seg <= 1e-15 ? stall + 1 : 0;
        if (stall >= 3)
            break;
        t += step;
        step *= 2.0;
    }
    return total;
}

double clip_eval(const std::function<double(double)>& f, double t, double lo,
                 double hi) {
    if (t < lo || t > hi)
        return 0.0;
    return f(t);
}

} // namespace

DelayDistribution hazard_from_density(std::function<double(double)> density,
                                      Support support) {
    auto gamma = std::make_shared<std::function<double(double)>>(std::move(density));
    const Support sup = support;

    const double mass = integrate_full(
        [&](double t) { return clip_eval(*gamma, t, sup.lo, sup.hi); }, sup.lo,
        sup.hi);
    if (!std::isfinite(mass) || std::fabs(mass - 1.0) > 1e-4)
        throw std::invalid_argument("hazard_from_density: density is not normalized");

    auto cdf = [gamma, sup](double t) {
        if (t <= sup.lo)
            return 0.0;
        const double upper = std::min(t, sup.hi);
        return adaptive_simpson(
            [&](double s) { return clip_eval(*gamma, s, sup.lo, sup.hi); }, sup.lo,
            upper, kQuadTol, kQuadDepth);
    };

    DelayDistribution d;
    d.support = sup;
    d.density = [gamma, sup](double t) { return clip_eval(*gamma, t, sup.lo, sup.hi); };
    d.hazard = [gamma, sup, cdf](double t) {
        const double survival = 1.0 - cdf(t);
        if (survival <= 1e-12)
            return 0.0; // zero by convention where the denominator vanishes
        return clip_eval(*gamma, t, sup.lo, sup.hi) / survival;
    };
    d.cumulative_hazard = [cdf](double t) {
        const double survival = 1.0 - cdf(t);
        if (survival <= 0.0)
            return kInfiniteDelay;
        return -std::log(survival);
    };
    return d;
}

DelayDistribution density_from_hazard(std::function<double(double)> hazard,
                                      Support support) {
    auto lambda = std::make_shared<std::function<double(double)>>(std::move(hazard));
    const Support sup = support;

    auto cumulative = [lambda, sup](double t) {
        if (t <= 0.0)
            return 0.0;
        const double upper = std::isfinite(sup.hi) ? std::min(t, sup.hi) : t;
        return adaptive_simpson([&](double s) { return std::max(0.0, (*lambda)(s)); },
                                0.0, upper, kQuadTol, kQuadDepth);
    };

    DelayDistribution d;
    d.support = sup;
    d.hazard = [lambda, sup](double t) {
        if (t < 0.0 || t > sup.hi)
            return 0.0;
        return (*lambda)(t);
    };
    d.cumulative_hazard = cumulative;
    d.density = [lambda, sup, cumulative](double t) {
        if (t < sup.lo || t > sup.hi)
            return 0.0;
        const double big_lambda = cumulative(t);
        if (!std::isfinite(big_lambda))
            return 0.0;
        return (*lambda)(t) * std::exp(-big_lambda);
    };
    return d;
}

} // namespace redsim
