#pragma once

#include <optional>

#include "catk/geometry.hpp"
#include "catk/maps.hpp"

namespace catk {

struct ProjectionResult {
    Point point;
    double parameter = 0.0; // arc-length fraction from segment.a, in [0, 1]
    double distance = 0.0;
};

// Nearest point of the segment. Closed form on the plane; golden-section on
// the arc parameter (tolerance 1e-12, one parabolic refinement) elsewhere.
ProjectionResult project_segment(const GeodesicSegment& seg, const Point& x);

Point project_fixset(const FixSet& fs, const Point& x);

// Comparison angle at q = P(x) between the directions to x and along the
// set; the projection's variational characterization makes it >= pi/2.
// Empty when no admissible direction exists (singleton sets, x = q).
std::optional<double> projection_angle_check(const FixSet& fs, const Point& x);

} // namespace catk
