#include "catk/projections.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "catk/detail/minimize.hpp"
#include "catk/errors.hpp"

namespace catk {

namespace {

ProjectionResult project_planar(const GeodesicSegment& seg, const Point& x) {
    const auto& a = as_planar(seg.a);
    const auto& b = as_planar(seg.b);
    const auto& p = as_planar(x);
    const Vec2 ab{b.x - a.x, b.y - a.y};
    const double len2 = dot(ab, ab);
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(dot(Vec2{p.x - a.x, p.y - a.y}, ab) / len2, 0.0, 1.0);
    const Point foot = planar(a.x + t * ab.x, a.y + t * ab.y);
    return {foot, t, dist(seg.space, x, foot)};
}

} // namespace

ProjectionResult project_segment(const GeodesicSegment& seg, const Point& x) {
    const Space& sp = seg.space;
    if (!sp.matches(x)) throw out_of_range_error("project_segment: point not in the space");
    {
        const double da = dist(sp, x, seg.a);
        const double db = dist(sp, x, seg.b);
        if (!(std::min(da, db) < sp.d_kappa() / 2.0))
            throw out_of_range_error("project_segment: point beyond the proximinality range");
    }

    if (sp.kind() == SpaceKind::plane) return project_planar(seg, x);

    const auto g = [&](double t) { return dist(sp, x, geodesic_point(sp, seg.a, seg.b, t)); };
    const double t = detail::golden_section_min(g, 0.0, 1.0, 1e-12);
    const Point foot = geodesic_point(sp, seg.a, seg.b, t);
    return {foot, t, dist(sp, x, foot)};
}

Point project_fixset(const FixSet& fs, const Point& x) {
    switch (fs.kind) {
    case FixSet::Kind::singleton: return *fs.point;
    case FixSet::Kind::whole_space: return x;
    case FixSet::Kind::segment: return project_segment(*fs.segment, x).point;
    }
    throw domain_error("unknown fix-set kind");
}

std::optional<double> projection_angle_check(const FixSet& fs, const Point& x) {
    if (fs.kind != FixSet::Kind::segment) return std::nullopt;
    const auto& seg = *fs.segment;
    const Space& sp = fs.space;

    const ProjectionResult pr = project_segment(seg, x);
    if (pr.distance < 1e-12) return std::nullopt; // x on the set: no angle at q

    // Comparison angle at q toward each endpoint that differs from q, taken
    // in the space's own model (spherical law of cosines on the CAT(1)
    // scale for sphere-like spaces, planar otherwise); the smaller one is
    // the binding direction.
    const double scale = sp.sphere_like() ? std::sqrt(sp.kappa()) : 1.0;
    double best = std::numeric_limits<double>::infinity();
    for (const Point* e : {&seg.a, &seg.b}) {
        const double dqe = dist(sp, pr.point, *e);
        if (dqe < 1e-12) continue;
        const double dxe = dist(sp, x, *e);
        double angle;
        if (sp.sphere_like()) {
            const double a = dxe * scale, b = pr.distance * scale, c = dqe * scale;
            angle = detail::checked_acos((std::cos(a) - std::cos(b) * std::cos(c)) /
                                         (std::sin(b) * std::sin(c)));
        } else {
            angle = comparison_angle(pr.distance, dqe, dxe);
        }
        best = std::min(best, angle);
    }
    if (!std::isfinite(best)) return std::nullopt; // degenerate segment
    return best;
}

} // namespace catk
