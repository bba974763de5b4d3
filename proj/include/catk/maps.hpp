#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "catk/geometry.hpp"
#include "catk/point.hpp"
#include "catk/space.hpp"

namespace catk {

struct IdentityMap {};

// Rotation about a unit axis; sphere-like spaces only.
struct RotationMap {
    Vec3 axis;
    double angle = 0.0;
};

// Metric projection onto a geodesic segment.
struct SegmentProjectionMap {
    GeodesicSegment segment;
};

// f(x) is the point of [anchor, x] with dist(anchor, f(x)) = k dist(anchor, x).
struct HomothetyMap {
    Point anchor;
    double k = 0.0;
};

// f(x) = value for every x (the Halpern specialization).
struct ConstantMap {
    Point value;
};

class MapSpec {
  public:
    using Impl =
        std::variant<IdentityMap, RotationMap, SegmentProjectionMap, HomothetyMap, ConstantMap>;

    static MapSpec identity(Space space);
    static MapSpec rotation(Space space, Vec3 axis, double angle);
    // Admitted only where segment projection is nonexpansive: plane, the
    // glued example, and sphere caps of angular radius below pi/4.
    static MapSpec segment_projection(GeodesicSegment segment);
    static MapSpec homothety(Space space, Point anchor, double k);
    static MapSpec constant(Space space, Point value);

    const Space& space() const { return space_; }
    const Impl& impl() const { return impl_; }

    bool is_contraction_family() const {
        return std::holds_alternative<HomothetyMap>(impl_) ||
               std::holds_alternative<ConstantMap>(impl_);
    }

    // Nominal contraction parameter: k for a homothety, 0 for a constant map.
    double contraction_k() const;

  private:
    MapSpec(Space space, Impl impl) : space_(std::move(space)), impl_(std::move(impl)) {}

    Space space_;
    Impl impl_;
};

struct FixSet {
    enum class Kind { singleton, segment, whole_space };

    Kind kind;
    Space space;
    std::optional<Point> point;              // singleton
    std::optional<GeodesicSegment> segment;  // segment

    static FixSet singleton(Space space, Point p) {
        return {Kind::singleton, std::move(space), std::move(p), std::nullopt};
    }
    static FixSet whole(Space space) {
        return {Kind::whole_space, std::move(space), std::nullopt, std::nullopt};
    }
    static FixSet of_segment(GeodesicSegment seg) {
        Space sp = seg.space;
        return {Kind::segment, std::move(sp), std::nullopt, std::move(seg)};
    }
};

Point apply(const MapSpec& map, const Point& x);

FixSet fix_set(const MapSpec& map);

// Max of dist(f(x), f(y)) / dist(x, y) over seeded random pairs of the
// admissible region.
double empirical_lipschitz(const MapSpec& map, std::int64_t trials, std::uint64_t seed);

// Contraction-constant admissibility threshold 2 sin^2(M/2) cos(M) / M^2
// for 0 < M < pi/2; decreasing, with limit 1/2 at 0.
double theorem_k_bound(double M);

} // namespace catk
