#include "catk/maps.hpp"

#include <cmath>
#include <numbers>

#include "catk/projections.hpp"
#include "catk/rng.hpp"

namespace catk {

MapSpec MapSpec::identity(Space space) { return MapSpec(std::move(space), IdentityMap{}); }

MapSpec MapSpec::rotation(Space space, Vec3 axis, double angle) {
    if (!space.sphere_like())
        throw domain_error("rotation maps are defined on sphere-like spaces only");
    if (std::abs(norm(axis) - 1.0) > 1e-12)
        throw domain_error("rotation axis must be a unit vector");
    return MapSpec(std::move(space), RotationMap{axis, angle});
}

MapSpec MapSpec::segment_projection(GeodesicSegment segment) {
    const Space& sp = segment.space;
    if (sp.sphere_like()) {
        if (!sp.has_cap() || !(sp.cap().radius * std::sqrt(sp.kappa()) < std::numbers::pi / 4.0))
            throw domain_error("segment projection on spheres needs a cap of angular radius "
                               "below pi/4 (nonexpansiveness regime)");
    }
    Space space = sp;
    return MapSpec(std::move(space), SegmentProjectionMap{std::move(segment)});
}

MapSpec MapSpec::homothety(Space space, Point anchor, double k) {
    if (!(k > 0.0 && k < 1.0)) throw domain_error("homothety factor must lie in (0, 1)");
    if (!space.contains(anchor))
        throw domain_error("homothety anchor outside the admissible region");
    return MapSpec(std::move(space), HomothetyMap{std::move(anchor), k});
}

MapSpec MapSpec::constant(Space space, Point value) {
    if (!space.contains(value))
        throw domain_error("constant map value outside the admissible region");
    return MapSpec(std::move(space), ConstantMap{std::move(value)});
}

double MapSpec::contraction_k() const {
    if (const auto* h = std::get_if<HomothetyMap>(&impl_)) return h->k;
    if (std::holds_alternative<ConstantMap>(impl_)) return 0.0;
    throw domain_error("map is not a contraction family");
}

Point apply(const MapSpec& map, const Point& x) {
    const Space& sp = map.space();
    if (!sp.contains(x)) throw domain_error("apply: point outside the admissible region");

    struct Visitor {
        const Space& sp;
        const Point& x;

        Point operator()(const IdentityMap&) const { return x; }

        Point operator()(const RotationMap& r) const {
            return SpherePoint{detail::rotate_about(as_spherical(x).v, r.axis, r.angle)};
        }

        Point operator()(const SegmentProjectionMap& m) const {
            return project_segment(m.segment, x).point;
        }

        Point operator()(const HomothetyMap& h) const {
            // dist(anchor, result) = k * dist(anchor, x)  =>  weight 1 - k on
            // the anchor.
            return combine(sp, 1.0 - h.k, h.anchor, x);
        }

        Point operator()(const ConstantMap& c) const { return c.value; }
    };
    return std::visit(Visitor{sp, x}, map.impl());
}

FixSet fix_set(const MapSpec& map) {
    const Space& sp = map.space();

    struct Visitor {
        const Space& sp;

        FixSet operator()(const IdentityMap&) const { return FixSet::whole(sp); }

        FixSet operator()(const RotationMap& r) const {
            const double turns = r.angle / (2.0 * std::numbers::pi);
            if (std::abs(turns - std::round(turns)) < 1e-15) return FixSet::whole(sp);
            // The pole on the admissible side of the axis.
            Vec3 pole = r.axis;
            if (sp.has_cap() && dot(as_spherical(sp.cap().center).v, r.axis) < 0.0)
                pole = -1.0 * pole;
            return FixSet::singleton(sp, SpherePoint{pole});
        }

        FixSet operator()(const SegmentProjectionMap& m) const {
            return FixSet::of_segment(m.segment);
        }

        FixSet operator()(const HomothetyMap& h) const { return FixSet::singleton(sp, h.anchor); }

        FixSet operator()(const ConstantMap& c) const { return FixSet::singleton(sp, c.value); }
    };
    return std::visit(Visitor{sp}, map.impl());
}

double empirical_lipschitz(const MapSpec& map, std::int64_t trials, std::uint64_t seed) {
    if (trials < 1) throw domain_error("empirical_lipschitz: trials must be >= 1");
    Rng rng(seed);
    const Space& sp = map.space();
    double worst = 0.0;
    for (std::int64_t i = 0; i < trials; ++i) {
        const Point x = rng.in_space(sp);
        const Point y = rng.in_space(sp);
        const double dxy = dist(sp, x, y);
        // Below this separation the image distance is dominated by the
        // projection solver's own tolerance, not the map.
        if (dxy < 1e-6) continue;
        const double dfxy = dist(sp, catk::apply(map, x), catk::apply(map, y));
        worst = std::max(worst, dfxy / dxy);
    }
    return worst;
}

double theorem_k_bound(double M) {
    if (!(M > 0.0 && M < std::numbers::pi / 2.0))
        throw domain_error("theorem_k_bound: M must lie in (0, pi/2)");
    const double s = std::sin(M / 2.0);
    return 2.0 * s * s * std::cos(M) / (M * M);
}

} // namespace catk
