#pragma once

#include "catk/point.hpp"
#include "catk/vec.hpp"

namespace catk {

// Two flat Euclidean triangles glued along a segment of length 4:
//   face 1 = triangle(A, B, C) in the plane y = 0, chart (u, w) = (x, z);
//   face 2 = triangle(C, D, E) in the plane x = 0, chart (u, w) = (y, z).
// D is the midpoint of [A, B], so the shared segment [C, D] is a median of
// face 1 and an edge of face 2; it is the chart line u = 0, w in [0, 4].
// The intrinsic metric is the shortest-path length inside the union.
struct GluedGeometry {
    // Ambient vertices.
    Vec3 A{-1.0, 0.0, 4.0};
    Vec3 B{1.0, 0.0, 4.0};
    Vec3 C{0.0, 0.0, 0.0};
    Vec3 D{0.0, 0.0, 4.0};
    Vec3 E{0.0, 3.0 * std::sqrt(7.0) / 8.0, 1.0 / 8.0};

    // Chart vertices.
    Vec2 A1{-1.0, 4.0};
    Vec2 B1{1.0, 4.0};
    Vec2 C1{0.0, 0.0};
    Vec2 C2{0.0, 0.0};
    Vec2 D2{0.0, 4.0};
    Vec2 E2{3.0 * std::sqrt(7.0) / 8.0, 1.0 / 8.0};

    double edge_length = 4.0;
};

const GluedGeometry& glued_geometry();

// Canonicalizing factory: checks face membership (barycentric test with
// slack 1e-12) and stores points of the shared edge as face-2 points.
Point glued_point(int face, double u, double w);

bool glued_contains(const GluedPoint& p);

Vec3 glued_ambient(const GluedPoint& p);
Vec2 glued_chart(const GluedPoint& p);

double glued_dist(const GluedPoint& p, const GluedPoint& q);

// z on a shortest path from p to q with d(p, z) = (1 - alpha) d(p, q).
Point glued_combine(double alpha, const GluedPoint& p, const GluedPoint& q);

// Optimal crossing of the shared edge for a cross-face pair, plus the two
// leg lengths (face-1 leg first). Exposed for the unfolding-consistency
// checks.
struct CrossFaceRoute {
    double s;     // crossing parameter on the shared edge, in [0, 4]
    double leg1;  // distance from the face-1 point to the crossing
    double leg2;  // distance from the crossing to the face-2 point
    bool chord;   // true when the unfolded straight chord was valid
};
CrossFaceRoute glued_cross_route(const GluedPoint& in_face1, const GluedPoint& in_face2);

// One-dimensional convex minimization over the crossing parameter; always
// applicable, used as the fallback and as the consistency oracle.
double glued_cross_dist_minimized(const GluedPoint& in_face1, const GluedPoint& in_face2);

struct NPropertyReport {
    Point A, B, C, D, E, F;

    Point proj_A, proj_B, proj_D;          // metric projections onto [C, E]
    double param_A = 0, param_B = 0, param_D = 0;
    double dist_A = 0, dist_B = 0, dist_D = 0;

    double d_AC = 0;                        // = sqrt(17)
    double d_AF = 0;                        // = sqrt((134 + 3*sqrt(7)) / 8)

    bool proj_D_equals_F = false;
    bool proj_A_equals_proj_B = false;
    bool proj_A_differs_from_F = false;
    bool F_in_segment_projA_projB = true;

    // Midpoint of [A,B] projects outside [P(A), P(B)]: the N-property fails.
    bool n_property_violated = false;
};

NPropertyReport n_property_witness();

} // namespace catk
