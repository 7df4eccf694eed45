#include "redsim/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace redsim {

namespace {

bool finite(double v) { return std::isfinite(v); }

struct SimpsonPanel {
    double fa, fm, fb;
    double estimate;
};

double simpson_estimate(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole,
                            double abs_tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    if (!finite(flm) || !finite(frm))
        return kInfiniteDelay;
    const double left = simpson_estimate(fa, flm, fm, m - a);
    const double right = simpson_estimate(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * abs_tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * abs_tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * abs_tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
    if (!(b > a))
        return 0.0;
    const double fa = f(a);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double fb = f(b);
    if (!finite(fa) || !finite(fm) || !finite(fb))
        return kInfiniteDelay;
    const double whole = simpson_estimate(fa, fm, fb, b - a);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

namespace {

// Bisects for the point inside [lo,hi] where the running integral reaches
// `x`; `acc_lo` is the integral up to lo. Panel sub-integrals are refined
// with adaptive Simpson as the bracket shrinks.
double bisect_hazard_panel(const std::function<double(double)>& hazard, double lo,
                           double hi, double acc_lo, double x,
                           const InversionOptions& opts) {
    const double panel_tol = 1e-13 * std::max(1.0, x);
    for (int iter = 0; iter < 200; ++iter) {
        const double width = hi - lo;
        if (width <= 1e-13 * hi)
            break;
        const double mid = lo + 0.5 * width;
        const double seg = adaptive_simpson(hazard, lo, mid, panel_tol);
        const double acc_mid = acc_lo + seg;
        if (!finite(acc_mid) || acc_mid >= x) {
            if (finite(acc_mid) &&
                std::fabs(acc_mid - x) <= opts.rel_tol * std::max(x, 1e-300))
                return mid;
            hi = mid;
        } else {
            if (std::fabs(acc_mid - x) <= opts.rel_tol * std::max(x, 1e-300))
                return mid;
            lo = mid;
            acc_lo = acc_mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

double invert_hazard_integral(const std::function<double(double)>& hazard, double x,
                              const InversionOptions& opts) {
    if (x <= 0.0)
        return 0.0;
    double t = 0.0;
    double acc = 0.0;
    double step = opts.initial_step;
    double max_hazard_seen = 0.0;
    int stall_streak = 0;
    const double panel_tol = 1e-13 * std::max(1.0, x);

    for (int panel = 0; panel < opts.max_panels; ++panel) {
        double b = t + step;
        // Shrink panels whose right edge hits a non-finite hazard (divergence
        // at a finite support endpoint). Once the panel width underflows the
        // endpoint has been reached: clamp, the residual survival mass is
        // below test resolution.
        while (!finite(hazard(b))) {
            step *= 0.5;
            b = t + step;
            if (step <= 1e-15 * std::max(1.0, t))
                return t;
        }
        const double seg = adaptive_simpson(hazard, t, b, panel_tol);
        if (!finite(seg) || acc + seg >= x)
            return bisect_hazard_panel(hazard, t, b, acc, x, opts);

        const double sup =
            std::max({hazard(t), hazard(0.5 * (t + b)), hazard(b)});
        max_hazard_seen = std::max(max_hazard_seen, sup);
        acc += seg;
        t = b;

        // Exhaustion: the hazard has decayed to a negligible fraction of its
        // running peak and panels stopped contributing; the delay never
        // materializes (defective distribution).
        const bool negligible =
            seg <= 1e-13 * std::max(1.0, x) && sup <= 1e-12 * max_hazard_seen;
        stall_streak = negligible ? stall_streak + 1 : 0;
        if (stall_streak >= 3 && max_hazard_seen > 0.0)
            return kInfiniteDelay;

        step *= 2.0;
    }
    return kInfiniteDelay;
}

double invert_monotone(const std::function<double(double)>& F, double x,
                       const InversionOptions& opts) {
    if (x <= 0.0)
        return 0.0;
    double lo = 0.0;
    double flo = 0.0;
    double hi = opts.initial_step;
    int stall_streak = 0;
    int panel = 0;
    for (; panel < opts.max_panels; ++panel) {
        const double fhi = F(hi);
        if (!finite(fhi) || fhi >= x)
            break;
        const double gain = fhi - flo;
        stall_streak = gain <= 1e-15 * std::max(1.0, x) ? stall_streak + 1 : 0;
        if (stall_streak >= 4)
            return kInfiniteDelay;
        lo = hi;
        flo = fhi;
        hi *= 2.0;
    }
    if (panel == opts.max_panels)
        return kInfiniteDelay;

    for (int iter = 0; iter < 200; ++iter) {
        if (hi - lo <= 1e-13 * hi)
            break;
        const double mid = lo + 0.5 * (hi - lo);
        const double fmid = F(mid);
        if (!finite(fmid) || fmid >= x) {
            if (finite(fmid) && std::fabs(fmid - x) <= opts.rel_tol * std::max(x, 1e-300))
                return mid;
            hi = mid;
        } else {
            if (std::fabs(fmid - x) <= opts.rel_tol * std::max(x, 1e-300))
                return mid;
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace redsim
