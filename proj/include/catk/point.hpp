#pragma once

#include <cmath>
#include <variant>

#include "catk/errors.hpp"
#include "catk/vec.hpp"

namespace catk {

struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;
};

// Unit vector in R^3; shared by the unit sphere and every rescaled sphere.
struct SpherePoint {
    Vec3 v;
};

// Chart coordinates on the glued two-triangle complex. Face 1 maps
// (u, w) -> (u, 0, w), face 2 maps (u, w) -> (0, u, w); the shared edge is
// u = 0, w in [0, 4] and is stored canonically on face 2.
struct GluedPoint {
    int face = 1;
    double u = 0.0;
    double w = 0.0;
};

using Point = std::variant<PlanarPoint, SpherePoint, GluedPoint>;

inline Point planar(double x, double y) { return PlanarPoint{x, y}; }

inline Point spherical(Vec3 v) {
    const double n = norm(v);
    if (std::abs(n - 1.0) > 1e-12)
        throw domain_error("spherical point is not a unit vector (|v| = " +
                           std::to_string(n) + ")");
    return SpherePoint{normalized(v)};
}

inline Point spherical(double x, double y, double z) { return spherical(Vec3{x, y, z}); }

inline bool is_planar(const Point& p) { return std::holds_alternative<PlanarPoint>(p); }
inline bool is_spherical(const Point& p) { return std::holds_alternative<SpherePoint>(p); }
inline bool is_glued(const Point& p) { return std::holds_alternative<GluedPoint>(p); }

inline const PlanarPoint& as_planar(const Point& p) {
    if (const auto* q = std::get_if<PlanarPoint>(&p)) return *q;
    throw domain_error("expected a planar point");
}

inline const SpherePoint& as_spherical(const Point& p) {
    if (const auto* q = std::get_if<SpherePoint>(&p)) return *q;
    throw domain_error("expected a spherical point");
}

inline const GluedPoint& as_glued(const Point& p) {
    if (const auto* q = std::get_if<GluedPoint>(&p)) return *q;
    throw domain_error("expected a glued-complex point");
}

} // namespace catk
