#include "catk/glued.hpp"

#include <algorithm>
#include <cmath>

#include "catk/detail/minimize.hpp"
#include "catk/errors.hpp"

namespace catk {

const GluedGeometry& glued_geometry() {
    static const GluedGeometry g;
    return g;
}

namespace {

constexpr double kBaryTol = 1e-12;

// Barycentric membership of chart point p in triangle (v1, v2, v3).
bool in_triangle(Vec2 p, Vec2 v1, Vec2 v2, Vec2 v3) {
    const double det = (v2.x - v1.x) * (v3.y - v1.y) - (v3.x - v1.x) * (v2.y - v1.y);
    const double l2 = ((p.x - v1.x) * (v3.y - v1.y) - (v3.x - v1.x) * (p.y - v1.y)) / det;
    const double l3 = ((v2.x - v1.x) * (p.y - v1.y) - (p.x - v1.x) * (v2.y - v1.y)) / det;
    const double l1 = 1.0 - l2 - l3;
    return l1 >= -kBaryTol && l2 >= -kBaryTol && l3 >= -kBaryTol;
}

double chart_dist(Vec2 a, Vec2 b) {
    const double du = a.x - b.x;
    const double dw = a.y - b.y;
    return std::sqrt(du * du + dw * dw);
}

} // namespace

bool glued_contains(const GluedPoint& p) {
    const auto& g = glued_geometry();
    if (p.face == 1) return in_triangle({p.u, p.w}, g.A1, g.B1, g.C1);
    if (p.face == 2) return in_triangle({p.u, p.w}, g.C2, g.D2, g.E2);
    return false;
}

Point glued_point(int face, double u, double w) {
    if (face != 1 && face != 2) throw domain_error("glued point: face must be 1 or 2");
    // Shared edge points live on face 2 so equality tests are chart equality.
    if (u == 0.0) face = 2;
    GluedPoint p{face, u, w};
    if (!glued_contains(p))
        throw domain_error("glued point (" + std::to_string(u) + ", " + std::to_string(w) +
                           ") lies outside face " + std::to_string(face));
    return p;
}

Vec3 glued_ambient(const GluedPoint& p) {
    if (p.face == 1) return {p.u, 0.0, p.w};
    return {0.0, p.u, p.w};
}

Vec2 glued_chart(const GluedPoint& p) { return {p.u, p.w}; }

double glued_cross_dist_minimized(const GluedPoint& p1, const GluedPoint& p2) {
    const auto legs = [&](double s) {
        const double l1u = p1.u, l1w = p1.w - s;
        const double l2u = p2.u, l2w = p2.w - s;
        return std::sqrt(l1u * l1u + l1w * l1w) + std::sqrt(l2u * l2u + l2w * l2w);
    };
    const double s = detail::golden_section_min(legs, 0.0, glued_geometry().edge_length, 1e-12);
    return legs(s);
}

CrossFaceRoute glued_cross_route(const GluedPoint& p1, const GluedPoint& p2) {
    const double edge = glued_geometry().edge_length;

    // Unfold face 2 across the edge line to the side opposite p1. Face-2
    // chart coordinates satisfy u >= 0, so the unfolded image of p2 is
    // (-sign(u1) * u2, w2) and the straight chord crosses u = 0.
    const double sgn = p1.u > 0.0 ? 1.0 : -1.0;
    const double uq = -sgn * p2.u;
    const double denom = p1.u - uq; // |u1| + |u2| with the right sign
    if (denom != 0.0) {
        const double tau = p1.u / denom;
        const double s = p1.w + tau * (p2.w - p1.w);
        if (s >= 0.0 && s <= edge) {
            const double leg1 = chart_dist({p1.u, p1.w}, {0.0, s});
            const double leg2 = chart_dist({p2.u, p2.w}, {0.0, s});
            return {s, leg1, leg2, true};
        }
    }

    const auto legs = [&](double s) {
        const double l1u = p1.u, l1w = p1.w - s;
        const double l2u = p2.u, l2w = p2.w - s;
        return std::sqrt(l1u * l1u + l1w * l1w) + std::sqrt(l2u * l2u + l2w * l2w);
    };
    const double s = detail::golden_section_min(legs, 0.0, edge, 1e-12);
    return {s, chart_dist({p1.u, p1.w}, {0.0, s}), chart_dist({p2.u, p2.w}, {0.0, s}), false};
}

double glued_dist(const GluedPoint& p, const GluedPoint& q) {
    if (!glued_contains(p) || !glued_contains(q))
        throw domain_error("glued_dist: point outside the complex");

    if (p.face == q.face) return chart_dist({p.u, p.w}, {q.u, q.w});

    const GluedPoint& f1 = p.face == 1 ? p : q;
    const GluedPoint& f2 = p.face == 1 ? q : p;
    const CrossFaceRoute r = glued_cross_route(f1, f2);
    if (r.chord) {
        // Exact chord length of the unfolded straight segment.
        const double sgn = f1.u > 0.0 ? 1.0 : -1.0;
        return chart_dist({f1.u, f1.w}, {-sgn * f2.u, f2.w});
    }
    return r.leg1 + r.leg2;
}

namespace {

Point chart_lerp(int face, Vec2 from, Vec2 to, double frac) {
    const double u = from.x + frac * (to.x - from.x);
    const double w = from.y + frac * (to.y - from.y);
    return glued_point(face, u, w);
}

} // namespace

Point glued_combine(double alpha, const GluedPoint& p, const GluedPoint& q) {
    if (!glued_contains(p) || !glued_contains(q))
        throw domain_error("glued_combine: point outside the complex");
    if (alpha == 1.0) return p;
    if (alpha == 0.0) return q;

    if (p.face == q.face)
        return chart_lerp(p.face, {p.u, p.w}, {q.u, q.w}, 1.0 - alpha);

    const bool p_first = p.face == 1;
    const GluedPoint& f1 = p_first ? p : q;
    const GluedPoint& f2 = p_first ? q : p;
    const CrossFaceRoute r = glued_cross_route(f1, f2);
    const double total = r.leg1 + r.leg2;

    // Arc length from p along the path p -> crossing -> q.
    const double from_p = (1.0 - alpha) * total;
    const double from_f1 = p_first ? from_p : total - from_p;

    const Vec2 crossing{0.0, r.s};
    if (from_f1 <= r.leg1) {
        const double frac = r.leg1 == 0.0 ? 0.0 : from_f1 / r.leg1;
        return chart_lerp(1, {f1.u, f1.w}, crossing, frac);
    }
    const double frac = r.leg2 == 0.0 ? 0.0 : (total - from_f1) / r.leg2;
    return chart_lerp(2, {f2.u, f2.w}, crossing, frac);
}

} // namespace catk
