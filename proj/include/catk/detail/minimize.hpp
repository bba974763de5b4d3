#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace catk::detail {

// Golden-section minimization of a unimodal function on [lo, hi], followed
// by one parabolic refinement on a fixed-width stencil. Plain golden section
// stalls at ~sqrt(eps) around a smooth minimum because nearby function
// values become indistinguishable; the stencil is wide enough (1e-5 of the
// interval) that the curvature still dominates rounding noise, which brings
// the minimizer back to ~1e-10 of the interval.
template <class F>
double golden_section_min(F&& f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;  // 1/phi
    constexpr double inv_phi2 = 0.3819660112501051; // 1/phi^2

    double a = lo, b = hi;
    double h = b - a;
    if (h <= tol) return 0.5 * (a + b);

    double c = a + inv_phi2 * h;
    double d = a + inv_phi * h;
    double fc = f(c);
    double fd = f(d);

    while (h > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            h = b - a;
            c = a + inv_phi2 * h;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            h = b - a;
            d = a + inv_phi * h;
            fd = f(d);
        }
    }

    double xm = fc < fd ? c : d;
    double fm = std::min(fc, fd);

    {
        const double step = 1e-5 * (hi - lo);
        double x1 = xm - step, x3 = xm + step;
        if (x1 < lo) {
            x1 = lo;
            x3 = lo + 2.0 * step;
        } else if (x3 > hi) {
            x3 = hi;
            x1 = hi - 2.0 * step;
        }
        const double x2 = 0.5 * (x1 + x3);
        const double f1 = f(x1), f2 = f(x2), f3 = f(x3);
        const double denom = f1 - 2.0 * f2 + f3;
        if (denom > 0.0) {
            const double xq = x2 + 0.5 * (f1 - f3) / denom * (0.5 * (x3 - x1));
            if (xq >= lo && xq <= hi && std::isfinite(xq)) {
                const double fq = f(xq);
                // Accept up to rounding noise: near a smooth minimum the
                // vertex is closer to the true minimizer even when fq ~ fm.
                const double slack = 8.0 * std::numeric_limits<double>::epsilon() *
                                     std::max(1.0, std::abs(fm));
                if (fq <= fm + slack) {
                    xm = xq;
                    fm = std::min(fm, fq);
                }
            }
        }
    }

    // Endpoint ties resolve exactly to the endpoint.
    if (f(lo) <= fm) return lo;
    if (f(hi) < fm) return hi;
    return xm;
}

} // namespace catk::detail
