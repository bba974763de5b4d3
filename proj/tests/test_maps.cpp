#include <doctest.h>

#include <cmath>
#include <numbers>

#include "catk/maps.hpp"
#include "catk/rng.hpp"

using namespace catk;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("apply: identity, rotation, homothety examples") {
    const Space cap = Space::sphere(spherical(0, 0, 1), 0.7);

    const MapSpec id = MapSpec::identity(cap);
    const Point x = spherical(std::sin(0.5), 0.0, std::cos(0.5));
    CHECK(norm(as_spherical(catk::apply(id, x)).v - as_spherical(x).v) == 0.0);

    const MapSpec rot = MapSpec::rotation(cap, {0, 0, 1}, kPi / 2);
    const Point r = catk::apply(rot, x);
    CHECK(as_spherical(r).v.x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(as_spherical(r).v.y == doctest::Approx(std::sin(0.5)).epsilon(1e-14));

    const Space disk = Space::plane(planar(0, 0), 10.0);
    const MapSpec hom = MapSpec::homothety(disk, planar(1, 1), 0.3);
    // Anchor is fixed.
    const Point fc = catk::apply(hom, planar(1, 1));
    CHECK(as_planar(fc).x == doctest::Approx(1.0).epsilon(1e-15));
    // dist(anchor, f(x)) = k dist(anchor, x).
    const Point fx = catk::apply(hom, planar(5, 1));
    CHECK(as_planar(fx).x == doctest::Approx(1.0 + 0.3 * 4.0).epsilon(1e-14));
    CHECK(as_planar(fx).y == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("apply rejects inadmissible points") {
    const Space disk = Space::plane(planar(0, 0), 1.0);
    const MapSpec id = MapSpec::identity(disk);
    CHECK_THROWS_AS(catk::apply(id, planar(5, 0)), domain_error);
}

TEST_CASE("map constructors validate their regimes") {
    const Space disk = Space::plane(planar(0, 0), 1.0);
    CHECK_THROWS_AS(MapSpec::rotation(disk, {0, 0, 1}, 1.0), domain_error);
    CHECK_THROWS_AS(MapSpec::homothety(disk, planar(0, 0), 1.5), domain_error);
    CHECK_THROWS_AS(MapSpec::homothety(disk, planar(9, 9), 0.5), domain_error);

    // Segment projection on spheres needs a cap (every constructible cap
    // already sits below the pi/4 angular radius).
    const Point a = spherical(std::sin(0.3), 0, std::cos(0.3));
    const Point b = spherical(-std::sin(0.3), 0, std::cos(0.3));
    CHECK_THROWS_AS(MapSpec::segment_projection(make_segment(Space::sphere(), a, b)),
                    domain_error);

    const Space cap = Space::sphere(spherical(0, 0, 1), 0.7);
    CHECK_NOTHROW(MapSpec::segment_projection(make_segment(cap, a, b)));
}

TEST_CASE("fix_set per map kind") {
    const Space cap = Space::sphere(spherical(0, 0, 1), 0.7);
    CHECK(fix_set(MapSpec::identity(cap)).kind == FixSet::Kind::whole_space);

    const FixSet rot = fix_set(MapSpec::rotation(cap, {0, 0, 1}, 1.0));
    CHECK(rot.kind == FixSet::Kind::singleton);
    CHECK(norm(as_spherical(*rot.point).v - Vec3{0, 0, 1}) == 0.0);

    // A full turn fixes everything.
    CHECK(fix_set(MapSpec::rotation(cap, {0, 0, 1}, 2 * kPi)).kind ==
          FixSet::Kind::whole_space);

    const Space disk = Space::plane(planar(0, 0), 5.0);
    const GeodesicSegment seg = make_segment(disk, planar(-1, 0), planar(1, 0));
    CHECK(fix_set(MapSpec::segment_projection(seg)).kind == FixSet::Kind::segment);
    CHECK(fix_set(MapSpec::homothety(disk, planar(0.5, 0), 0.3)).kind ==
          FixSet::Kind::singleton);
}

TEST_CASE("fixed points are fixed under apply") {
    Rng rng(31);
    const Space cap = Space::sphere(spherical(0, 0, 1), 0.7);
    const Space disk = Space::plane(planar(0, 0), 5.0);

    const MapSpec rot = MapSpec::rotation(cap, {0, 0, 1}, 1.0);
    const Point pole = *fix_set(rot).point;
    CHECK(dist(cap, catk::apply(rot, pole), pole) <= 1e-10);

    const MapSpec hom = MapSpec::homothety(disk, planar(0.5, -0.25), 0.4);
    const Point anchor = *fix_set(hom).point;
    CHECK(dist(disk, catk::apply(hom, anchor), anchor) <= 1e-10);

    const GeodesicSegment seg = make_segment(disk, planar(-1, 0), planar(1, 0));
    const MapSpec proj = MapSpec::segment_projection(seg);
    for (int i = 0; i < 200; ++i) {
        const Point p = combine(disk, rng.uniform(), seg.a, seg.b);
        REQUIRE(dist(disk, catk::apply(proj, p), p) <= 1e-10);
    }
}

TEST_CASE("empirical_lipschitz: nonexpansive and contractive bounds") {
    const Space cap = Space::sphere(spherical(0, 0, 1), 0.5);
    const Space disk = Space::plane(planar(0, 0), 2.0);

    CHECK(empirical_lipschitz(MapSpec::identity(cap), 2000, 5) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(empirical_lipschitz(MapSpec::rotation(cap, {0, 0, 1}, 1.0), 100000, 5) <=
          1.0 + 1e-9);

    // Euclidean homothety is exactly k-Lipschitz.
    CHECK(empirical_lipschitz(MapSpec::homothety(disk, planar(0.3, 0.1), 0.3), 100000, 5) <=
          0.3 + 1e-12);

    // Sphere cap of enforced diameter M = 1: the constant is bounded by
    // sin(kM)/sin(M), strictly above k.
    const MapSpec hom = MapSpec::homothety(cap, spherical(0, 0, 1), 0.3);
    const double lip = empirical_lipschitz(hom, 100000, 5);
    const double bound = std::sin(0.3 * 1.0) / std::sin(1.0);
    CHECK(lip <= bound + 1e-9);
    CHECK(bound == doctest::Approx(0.3512).epsilon(1e-3));

    // Nonexpansiveness of every built-in T on its regime.
    const GeodesicSegment seg = make_segment(disk, planar(-1, 0), planar(1, 0));
    CHECK(empirical_lipschitz(MapSpec::segment_projection(seg), 100000, 6) <= 1.0 + 1e-10);
}

TEST_CASE("theorem_k_bound: values, monotonicity, limits") {
    CHECK_THROWS_AS(theorem_k_bound(0.0), domain_error);
    CHECK_THROWS_AS(theorem_k_bound(kPi / 2), domain_error);

    CHECK(theorem_k_bound(kPi / 3) == doctest::Approx(0.227972).epsilon(1e-5));
    CHECK(theorem_k_bound(kPi / 3) ==
          doctest::Approx(2.0 * std::pow(std::sin(kPi / 6), 2) * std::cos(kPi / 3) /
                          std::pow(kPi / 3, 2))
              .epsilon(1e-15));

    // Limit 1/2 as M -> 0+, and strictly decreasing on a grid.
    CHECK(theorem_k_bound(1e-6) == doctest::Approx(0.5).epsilon(1e-9));
    double prev = theorem_k_bound(0.01);
    for (double M = 0.05; M < kPi / 2; M += 0.05) {
        const double cur = theorem_k_bound(M);
        REQUIRE(cur < prev);
        prev = cur;
    }
}

TEST_CASE("rotation primitive: quarter turn about the vertical axis") {
    const Vec3 r = catk::detail::rotate_about({1, 0, 0}, {0, 0, 1}, kPi / 2);
    CHECK(norm(r - Vec3{0, 1, 0}) <= 1e-15);
}

TEST_CASE("fix_set picks the rotation pole on the cap's side of the axis") {
    const Space cap = Space::sphere(spherical(0, 0, -1), 0.7);
    const FixSet fs = fix_set(MapSpec::rotation(cap, {0, 0, 1}, 1.0));
    REQUIRE(fs.kind == FixSet::Kind::singleton);
    CHECK(norm(as_spherical(*fs.point).v - Vec3{0, 0, -1}) == 0.0);
}
