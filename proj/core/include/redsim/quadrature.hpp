#ifndef REDSIM_QUADRATURE_HPP
#define REDSIM_QUADRATURE_HPP

#include <functional>
#include <limits>

namespace redsim {

inline constexpr double kInfiniteDelay = std::numeric_limits<double>::infinity();

/// Adaptive Simpson quadrature of f over [a,b]. Returns +inf if the
/// integrand is not finite anywhere it is sampled.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 40);

struct InversionOptions {
    double initial_step = 0.0625;
    double rel_tol = 1e-9;       // on the accumulated integral vs the target
    int max_panels = 220;        // panel widths double, so the reach is astronomical
};

/// Solves int_0^t h(s) ds = x for t >= 0 given h >= 0, by composite panel
/// stepping with interval doubling until x is bracketed, then bisection with
/// local Simpson refinement. Returns +inf when the total hazard mass is
/// exhausted below x (defective delay). Hazards diverging at a finite support
/// endpoint are clamped to that endpoint once the remaining survival mass is
/// below ~1e-12.
double invert_hazard_integral(const std::function<double(double)>& hazard, double x,
                              const InversionOptions& opts = {});

/// Solves F(t) = x for a nondecreasing F with F(0) = 0 (closed-form
/// cumulative hazards). Same bracketing/bisection scheme without quadrature.
/// Returns +inf when F plateaus below x.
double invert_monotone(const std::function<double(double)>& F, double x,
                       const InversionOptions& opts = {});

} // namespace redsim

#endif
