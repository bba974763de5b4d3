#include <doctest.h>

#include <cmath>
#include <numbers>

#include "catk/glued.hpp"
#include "catk/maps.hpp"
#include "catk/projections.hpp"
#include "catk/rng.hpp"

using namespace catk;

namespace {

constexpr double kPi = std::numbers::pi;

// Dense-grid argmin oracle for a segment projection.
double grid_projection_parameter(const GeodesicSegment& seg, const Point& x, int grid) {
    double best = 0.0, best_d = dist(seg.space, x, seg.a);
    for (int i = 1; i <= grid; ++i) {
        const double t = static_cast<double>(i) / grid;
        const double d = dist(seg.space, x, geodesic_point(seg.space, seg.a, seg.b, t));
        if (d < best_d) {
            best_d = d;
            best = t;
        }
    }
    return best;
}

} // namespace

TEST_CASE("project_segment: planar closed form") {
    const Space plane = Space::plane();
    const GeodesicSegment seg = make_segment(plane, planar(-1, 0), planar(1, 0));

    const ProjectionResult r = project_segment(seg, planar(0, 1));
    CHECK(as_planar(r.point).x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(as_planar(r.point).y == 0.0);
    CHECK(r.parameter == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.distance == doctest::Approx(1.0).epsilon(1e-15));

    // Clamped beyond the endpoints.
    CHECK(project_segment(seg, planar(5, 2)).parameter == 1.0);
    CHECK(project_segment(seg, planar(-7, -1)).parameter == 0.0);
}

TEST_CASE("project_segment: spherical symmetry example") {
    const Space sphere = Space::sphere();
    const GeodesicSegment seg = make_segment(sphere, spherical(1, 0, 0), spherical(0, 1, 0));
    const double s = 1.0 / std::sqrt(3.0);
    const ProjectionResult r = project_segment(seg, spherical(s, s, s));
    CHECK(norm(as_spherical(r.point).v -
               Vec3{1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0.0}) <= 1e-9);
    CHECK(r.parameter == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("project_segment: glued paper example P(D) = F") {
    const Space sp = Space::glued();
    const auto& g = glued_geometry();
    const GeodesicSegment ce =
        make_segment(sp, glued_point(2, 0, 0), glued_point(2, g.E2.x, g.E2.y));
    const ProjectionResult r = project_segment(ce, glued_point(2, 0, 4));
    CHECK(as_glued(r.point).u == doctest::Approx(3.0 * std::sqrt(7.0) / 16.0).epsilon(1e-9));
    CHECK(as_glued(r.point).w == doctest::Approx(1.0 / 16.0).epsilon(1e-8));
}

TEST_CASE("project_segment: variational property against the grid oracle") {
    Rng rng(41);

    SUBCASE("plane") {
        const Space disk = Space::plane(planar(0, 0), 5.0);
        for (int i = 0; i < 10000; ++i) {
            const Vec2 a = rng.disk({0, 0}, 4.0), b = rng.disk({0, 0}, 4.0),
                       x = rng.disk({0, 0}, 4.0);
            if (norm(b - a) < 1e-6) continue;
            const GeodesicSegment seg =
                make_segment(disk, planar(a.x, a.y), planar(b.x, b.y));
            const ProjectionResult r = project_segment(seg, planar(x.x, x.y));
            for (int k = 0; k <= 1000; ++k)
                REQUIRE(r.distance <= dist(disk, planar(x.x, x.y),
                                           geodesic_point(disk, seg.a, seg.b, k / 1000.0)) +
                                          1e-10);
        }
    }

    SUBCASE("sphere cap") {
        const Space cap = Space::sphere(spherical(0, 0, 1), 0.7);
        for (int i = 0; i < 1000; ++i) {
            const Point a = SpherePoint{rng.sphere_cap({0, 0, 1}, 0.7)};
            const Point b = SpherePoint{rng.sphere_cap({0, 0, 1}, 0.7)};
            const Point x = SpherePoint{rng.sphere_cap({0, 0, 1}, 0.7)};
            if (dist(cap, a, b) < 1e-4) continue;
            const GeodesicSegment seg = make_segment(cap, a, b);
            const ProjectionResult r = project_segment(seg, x);
            const double tg = grid_projection_parameter(seg, x, 1000);
            REQUIRE(std::abs(r.parameter - tg) <= 1e-3 + 1e-6); // grid pitch 1e-3
            REQUIRE(r.distance <=
                    dist(cap, x, geodesic_point(cap, seg.a, seg.b, tg)) + 1e-10);
        }
    }

    SUBCASE("glued") {
        const Space sp = Space::glued();
        for (int i = 0; i < 100; ++i) {
            const Point a = rng.glued_point_uniform();
            const Point b = rng.glued_point_uniform();
            const Point x = rng.glued_point_uniform();
            if (dist(sp, a, b) < 1e-3) continue;
            const GeodesicSegment seg = make_segment(sp, a, b);
            const ProjectionResult r = project_segment(seg, x);
            for (int k = 0; k <= 200; ++k)
                REQUIRE(r.distance <= dist(sp, x,
                                           geodesic_point(sp, seg.a, seg.b, k / 200.0)) +
                                          1e-8);
        }
    }
}

TEST_CASE("project_segment: idempotence everywhere, nonexpansiveness on CAT(0)") {
    Rng rng(42);

    const Space disk = Space::plane(planar(0, 0), 5.0);
    const GeodesicSegment pseg = make_segment(disk, planar(-1, -0.5), planar(2, 1));
    for (int i = 0; i < 20000; ++i) {
        const Vec2 x = rng.disk({0, 0}, 4.0), y = rng.disk({0, 0}, 4.0);
        const Point px = project_segment(pseg, planar(x.x, x.y)).point;
        const Point py = project_segment(pseg, planar(y.x, y.y)).point;
        REQUIRE(dist(disk, px, py) <= dist(disk, planar(x.x, x.y), planar(y.x, y.y)) + 1e-9);
        REQUIRE(dist(disk, project_segment(pseg, px).point, px) <= 1e-10);
    }

    const Space glued = Space::glued();
    const GeodesicSegment gseg =
        make_segment(glued, glued_point(1, -0.4, 2.0), glued_point(2, 0.3, 1.0));
    for (int i = 0; i < 500; ++i) {
        const Point x = rng.glued_point_uniform();
        const Point y = rng.glued_point_uniform();
        const Point px = project_segment(gseg, x).point;
        const Point py = project_segment(gseg, y).point;
        REQUIRE(dist(glued, px, py) <= dist(glued, x, y) + 1e-8);
        REQUIRE(dist(glued, project_segment(gseg, px).point, px) <= 1e-9);
    }

    // On a positively curved cap the projection is idempotent but genuinely
    // expands some pairs (azimuthal stretch), so no nonexpansiveness here.
    const Space cap = Space::sphere(spherical(0, 0, 1), 0.7);
    const Point sa = SpherePoint{rng.sphere_cap({0, 0, 1}, 0.7)};
    const Point sb = SpherePoint{rng.sphere_cap({0, 0, 1}, 0.7)};
    const GeodesicSegment sseg = make_segment(cap, sa, sb);
    for (int i = 0; i < 2000; ++i) {
        const Point x = SpherePoint{rng.sphere_cap({0, 0, 1}, 0.7)};
        const Point px = project_segment(sseg, x).point;
        REQUIRE(dist(cap, project_segment(sseg, px).point, px) <= 1e-10);
    }
    const MapSpec sphere_proj = MapSpec::segment_projection(sseg);
    CHECK(empirical_lipschitz(sphere_proj, 20000, 99) > 1.0 + 1e-6);
}

TEST_CASE("project_fixset dispatch") {
    const Space disk = Space::plane(planar(0, 0), 5.0);
    const Point p = planar(0.5, 0.25);

    CHECK(as_planar(project_fixset(FixSet::singleton(disk, planar(1, 1)), p)).x == 1.0);
    CHECK(as_planar(project_fixset(FixSet::whole(disk), p)).x == 0.5);

    const GeodesicSegment seg = make_segment(disk, planar(-1, 0), planar(1, 0));
    const Point foot = project_fixset(FixSet::of_segment(seg), p);
    CHECK(as_planar(foot).x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(as_planar(foot).y == 0.0);
}

TEST_CASE("projection_angle_check: right angles at interior feet") {
    const Space disk = Space::plane(planar(0, 0), 5.0);
    const GeodesicSegment seg = make_segment(disk, planar(-1, 0), planar(1, 0));
    const auto angle = projection_angle_check(FixSet::of_segment(seg), planar(0.2, 1.5));
    REQUIRE(angle.has_value());
    CHECK(*angle == doctest::Approx(kPi / 2).epsilon(1e-9));

    // Glued example: angle at F between D and the segment directions is pi/2.
    const Space glued = Space::glued();
    const auto& g = glued_geometry();
    const GeodesicSegment ce =
        make_segment(glued, glued_point(2, 0, 0), glued_point(2, g.E2.x, g.E2.y));
    const auto af = projection_angle_check(FixSet::of_segment(ce), glued_point(2, 0, 4));
    REQUIRE(af.has_value());
    CHECK(*af == doctest::Approx(kPi / 2).epsilon(1e-6));

    // Singleton sets expose no direction.
    CHECK_FALSE(projection_angle_check(FixSet::singleton(disk, planar(0, 0)), planar(1, 1))
                    .has_value());
}

TEST_CASE("projection_angle_check: sphere cap feet are never acute") {
    Rng rng(43);
    const Space cap = Space::sphere(spherical(0, 0, 1), 0.7);
    for (int i = 0; i < 500; ++i) {
        const Point a = SpherePoint{rng.sphere_cap({0, 0, 1}, 0.7)};
        const Point b = SpherePoint{rng.sphere_cap({0, 0, 1}, 0.7)};
        const Point x = SpherePoint{rng.sphere_cap({0, 0, 1}, 0.7)};
        if (dist(cap, a, b) < 1e-3) continue;
        const auto angle = projection_angle_check(FixSet::of_segment(make_segment(cap, a, b)), x);
        if (!angle) continue;
        REQUIRE(*angle >= kPi / 2 - 1e-6);
    }
}

TEST_CASE("project_segment: points beyond the proximinality range raise") {
    const Space sphere = Space::sphere();
    const Point a = spherical(std::sin(0.1), 0, std::cos(0.1));
    const Point b = spherical(0, std::sin(0.1), std::cos(0.1));
    const GeodesicSegment seg = make_segment(sphere, a, b);
    CHECK_THROWS_AS(project_segment(seg, spherical(0, 0, -1)), out_of_range_error);
}

TEST_CASE("project_segment: sphere foot agrees with a 1e6-sample grid argmin") {
    const Space cap = Space::sphere(spherical(0, 0, 1), 0.7);
    const Point a = spherical(std::sin(0.55), 0.1 * std::cos(0.3), 0.0 + std::sqrt(1 - std::pow(std::sin(0.55), 2) - std::pow(0.1 * std::cos(0.3), 2)));
    const Point b = spherical(-0.2, std::sin(0.5), std::sqrt(1 - 0.04 - std::pow(std::sin(0.5), 2)));
    const Point x = spherical(0.3, -0.25, std::sqrt(1 - 0.09 - 0.0625));
    const GeodesicSegment seg = make_segment(cap, a, b);
    const ProjectionResult r = project_segment(seg, x);

    double best_d = 1e300, best_t = 0.0;
    const int n = 1000000;
    for (int i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) / n;
        const double d = dist(cap, x, geodesic_point(cap, seg.a, seg.b, t));
        if (d < best_d) {
            best_d = d;
            best_t = t;
        }
    }
    CHECK(std::abs(r.parameter - best_t) <= 1e-6);
    CHECK(r.distance <= best_d + 1e-12);
}
