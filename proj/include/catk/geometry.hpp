#pragma once

#include <array>

#include "catk/point.hpp"
#include "catk/space.hpp"

namespace catk {

// Geodesic distance in the space's native units. Spherical distances are
// computed as atan2(|x cross y|, <x, y>) (stable near 0 and pi); the scaled
// sphere divides the unit-sphere value by sqrt(kappa).
double dist(const Space& space, const Point& p, const Point& q);

// The point alpha*x + (1-alpha)*y of [x, y]: the combination convention puts
// it at distance (1-alpha)*dist(x, y) from x. Spherical segments are
// evaluated by arc-length parameterization (slerp); antipodal endpoints
// (unit-sphere distance >= pi - 1e-9) have no unique geodesic and raise.
Point combine(const Space& space, double alpha, const Point& x, const Point& y);

// Point at arc-length fraction frac from a toward b.
inline Point geodesic_point(const Space& space, const Point& a, const Point& b, double frac) {
    return combine(space, 1.0 - frac, a, b);
}

// Angle at x between [x, y] and [x, z] on the unit sphere, from the
// spherical law of cosines; requires d(x,y), d(x,z) in (0, pi).
double spherical_angle(const Point& x, const Point& y, const Point& z);

// Euclidean comparison angle at the first vertex of the triangle with the
// given side lengths (planar law of cosines).
double comparison_angle(double at_first, double at_second, double opposite);

// Canonically placed triangle in the model space M^2_kappa with the given
// side lengths: vertex 1 at the origin / north pole, vertex 2 along the
// first axis, vertex 3 in the upper half.
std::array<Point, 3> comparison_triangle(double d12, double d23, double d31, double kappa);

// CAT(kappa) comparison margin for the triangle (x1, x2, x3) of `space`
// compared in the model space of the same kappa: y1 at arc fraction s along
// [x1, x2], y2 at fraction t along [x1, x3];
// returns d(comparison y1, comparison y2) - dist(y1, y2).
double cat_comparison_check(const Space& space, const Point& x1, const Point& x2,
                            const Point& x3, double s, double t);

struct GeodesicSegment {
    Point a;
    Point b;
    Space space;
};

// Checks the uniqueness regime dist(a, b) < D_kappa.
GeodesicSegment make_segment(const Space& space, const Point& a, const Point& b);

namespace detail {

// arccos with the documented clamping rule: arguments within 1e-12 outside
// [-1, 1] are clamped; anything farther is a logic error and raises.
double checked_acos(double c);

// Rodrigues rotation of v about the unit axis.
Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle);

double sphere_dist(const Vec3& x, const Vec3& y);
Vec3 slerp(const Vec3& x, const Vec3& y, double arc_frac_from_x);

} // namespace detail

} // namespace catk
