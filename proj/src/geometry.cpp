#include "catk/geometry.hpp"

#include <cmath>
#include <numbers>

#include "catk/errors.hpp"

namespace catk {

namespace detail {

double checked_acos(double c) {
    if (c > 1.0) {
        if (c > 1.0 + 1e-12) throw domain_error("cosine argument exceeds 1 beyond rounding");
        c = 1.0;
    } else if (c < -1.0) {
        if (c < -1.0 - 1e-12) throw domain_error("cosine argument below -1 beyond rounding");
        c = -1.0;
    }
    return std::acos(c);
}

double sphere_dist(const Vec3& x, const Vec3& y) {
    return std::atan2(norm(cross(x, y)), dot(x, y));
}

Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Vec3 k = axis;
    return c * v + s * cross(k, v) + ((1.0 - c) * dot(k, v)) * k;
}

Vec3 slerp(const Vec3& x, const Vec3& y, double frac) {
    const double theta = sphere_dist(x, y);
    if (theta >= std::numbers::pi - 1e-9)
        throw nonunique_geodesic_error("antipodal endpoints: geodesic not unique");
    if (theta < 1e-15) return x;
    const double st = std::sin(theta);
    const Vec3 z = (std::sin((1.0 - frac) * theta) / st) * x + (std::sin(frac * theta) / st) * y;
    return normalized(z);
}

} // namespace detail

namespace {

void require_same_kind(const Space& space, const Point& p, const Point& q) {
    if (!space.matches(p) || !space.matches(q))
        throw domain_error("point does not belong to the given space");
}

} // namespace

double Space::glued_diameter() {
    // Realized by the vertex pair (A, E); fixed geometry, computed once.
    static const double d = [] {
        const auto& g = glued_geometry();
        const GluedPoint a{1, g.A1.x, g.A1.y};
        const GluedPoint e{2, g.E2.x, g.E2.y};
        double best = glued_dist(a, e);
        const GluedPoint b{1, g.B1.x, g.B1.y};
        best = std::max(best, glued_dist(b, e));
        best = std::max(best, glued_dist(a, b));
        best = std::max(best, glued_dist(a, GluedPoint{2, 0.0, 0.0}));
        return best;
    }();
    return d;
}

bool Space::contains(const Point& p, double slack) const {
    if (!matches(p)) return false;
    if (!cap_) return true;
    return dist(*this, cap_->center, p) <= cap_->radius + slack;
}

double dist(const Space& space, const Point& p, const Point& q) {
    require_same_kind(space, p, q);
    switch (space.kind()) {
    case SpaceKind::plane: {
        const auto& a = as_planar(p);
        const auto& b = as_planar(q);
        const double dx = a.x - b.x;
        const double dy = a.y - b.y;
        return std::sqrt(dx * dx + dy * dy);
    }
    case SpaceKind::sphere:
        return detail::sphere_dist(as_spherical(p).v, as_spherical(q).v);
    case SpaceKind::scaled_sphere:
        return detail::sphere_dist(as_spherical(p).v, as_spherical(q).v) /
               std::sqrt(space.kappa());
    case SpaceKind::glued_example:
        return glued_dist(as_glued(p), as_glued(q));
    }
    throw domain_error("unknown space kind");
}

Point combine(const Space& space, double alpha, const Point& x, const Point& y) {
    require_same_kind(space, x, y);
    if (alpha < 0.0 || alpha > 1.0) throw domain_error("combination weight outside [0, 1]");
    if (alpha == 1.0) return x;
    if (alpha == 0.0) return y;

    switch (space.kind()) {
    case SpaceKind::plane: {
        const auto& a = as_planar(x);
        const auto& b = as_planar(y);
        return planar(alpha * a.x + (1.0 - alpha) * b.x, alpha * a.y + (1.0 - alpha) * b.y);
    }
    case SpaceKind::sphere:
    case SpaceKind::scaled_sphere:
        return SpherePoint{detail::slerp(as_spherical(x).v, as_spherical(y).v, 1.0 - alpha)};
    case SpaceKind::glued_example:
        return glued_combine(alpha, as_glued(x), as_glued(y));
    }
    throw domain_error("unknown space kind");
}

double spherical_angle(const Point& x, const Point& y, const Point& z) {
    const Vec3& vx = as_spherical(x).v;
    const Vec3& vy = as_spherical(y).v;
    const Vec3& vz = as_spherical(z).v;
    const double b = detail::sphere_dist(vx, vy);
    const double c = detail::sphere_dist(vx, vz);
    if (b == 0.0 || c == 0.0) throw domain_error("spherical angle at a coincident vertex");
    if (b >= std::numbers::pi || c >= std::numbers::pi)
        throw domain_error("spherical angle undefined for an antipodal edge");
    const double a = detail::sphere_dist(vy, vz);
    // cos a = cos b cos c + sin b sin c cos(angle)
    const double cosang = (std::cos(a) - std::cos(b) * std::cos(c)) / (std::sin(b) * std::sin(c));
    return detail::checked_acos(cosang);
}

double comparison_angle(double at_first, double at_second, double opposite) {
    if (at_first <= 0.0 || at_second <= 0.0)
        throw domain_error("comparison angle at a degenerate vertex");
    const double c = (at_first * at_first + at_second * at_second - opposite * opposite) /
                     (2.0 * at_first * at_second);
    return detail::checked_acos(c);
}

std::array<Point, 3> comparison_triangle(double d12, double d23, double d31, double kappa) {
    if (d12 < 0.0 || d23 < 0.0 || d31 < 0.0)
        throw infeasible_error("comparison triangle: negative side length");
    const double tol = 1e-12;
    if (d12 > d23 + d31 + tol || d23 > d31 + d12 + tol || d31 > d12 + d23 + tol)
        throw infeasible_error("comparison triangle: triangle inequality violated");

    if (kappa == 0.0) {
        const double theta =
            (d12 == 0.0 || d31 == 0.0)
                ? 0.0
                : detail::checked_acos((d12 * d12 + d31 * d31 - d23 * d23) / (2.0 * d12 * d31));
        return {planar(0.0, 0.0), planar(d12, 0.0),
                planar(d31 * std::cos(theta), d31 * std::sin(theta))};
    }

    if (!(kappa > 0.0)) throw infeasible_error("comparison triangle: kappa must be >= 0");
    const double rt = std::sqrt(kappa);
    const double a12 = d12 * rt;
    const double a23 = d23 * rt;
    const double a31 = d31 * rt;
    if (a12 + a23 + a31 >= 2.0 * std::numbers::pi)
        throw infeasible_error("comparison triangle: perimeter must stay below 2 D_kappa");
    if (a12 > std::numbers::pi || a23 > std::numbers::pi || a31 > std::numbers::pi)
        throw infeasible_error("comparison triangle: side exceeds D_kappa");

    // Vertex 1 at the north pole, vertex 2 on the meridian of azimuth 0,
    // vertex 3 at azimuth equal to the angle at vertex 1, upper half.
    double theta = 0.0;
    if (a12 > 0.0 && a31 > 0.0) {
        const double c =
            (std::cos(a23) - std::cos(a12) * std::cos(a31)) / (std::sin(a12) * std::sin(a31));
        theta = detail::checked_acos(c);
    }
    const Vec3 v1{0.0, 0.0, 1.0};
    const Vec3 v2{std::sin(a12), 0.0, std::cos(a12)};
    const Vec3 v3{std::sin(a31) * std::cos(theta), std::sin(a31) * std::sin(theta),
                  std::cos(a31)};
    return {SpherePoint{v1}, SpherePoint{v2}, SpherePoint{normalized(v3)}};
}

double cat_comparison_check(const Space& space, const Point& x1, const Point& x2,
                            const Point& x3, double s, double t) {
    const double d12 = dist(space, x1, x2);
    const double d23 = dist(space, x2, x3);
    const double d31 = dist(space, x3, x1);
    if (d12 + d23 + d31 >= 2.0 * space.d_kappa())
        throw infeasible_error("cat_comparison_check: perimeter bound violated");

    const Point y1 = geodesic_point(space, x1, x2, s);
    const Point y2 = geodesic_point(space, x1, x3, t);

    const auto tri = comparison_triangle(d12, d23, d31, space.kappa());
    const Space model = Space::model(space.kappa());
    const Point cy1 = geodesic_point(model, tri[0], tri[1], s);
    const Point cy2 = geodesic_point(model, tri[0], tri[2], t);

    return dist(model, cy1, cy2) - dist(space, y1, y2);
}

GeodesicSegment make_segment(const Space& space, const Point& a, const Point& b) {
    if (!(dist(space, a, b) < space.d_kappa()))
        throw nonunique_geodesic_error("segment endpoints beyond the uniqueness regime");
    return GeodesicSegment{a, b, space};
}

} // namespace catk
