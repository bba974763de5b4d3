#include <doctest.h>

#include <cmath>

#include "catk/geometry.hpp"
#include "catk/glued.hpp"
#include "catk/rng.hpp"

using namespace catk;

TEST_CASE("glued geometry constants") {
    const auto& g = glued_geometry();
    CHECK(g.E.y == 3.0 * std::sqrt(7.0) / 8.0);
    CHECK(g.E.z == 0.125);
    // D is the chart-1 midpoint of [A, B].
    CHECK((g.A1.x + g.B1.x) / 2 == 0.0);
    CHECK((g.A1.y + g.B1.y) / 2 == 4.0);
    // [C, E] has length exactly 1 in the face-2 chart.
    CHECK(norm(g.E2 - g.C2) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("glued points: containment and canonical edge storage") {
    CHECK_THROWS_AS(glued_point(1, 2.0, 1.0), domain_error);
    CHECK_THROWS_AS(glued_point(2, -0.5, 1.0), domain_error);
    CHECK_THROWS_AS(glued_point(3, 0.0, 0.0), domain_error);

    // Shared-edge points canonicalize to face 2.
    const Point e = glued_point(1, 0.0, 2.5);
    CHECK(as_glued(e).face == 2);
    CHECK(as_glued(e).u == 0.0);
    CHECK(as_glued(e).w == 2.5);
}

TEST_CASE("glued_dist: paper distances") {
    const auto& g = glued_geometry();
    const GluedPoint A{1, g.A1.x, g.A1.y};
    const GluedPoint B{1, g.B1.x, g.B1.y};
    const GluedPoint C{2, 0.0, 0.0};
    const GluedPoint F{2, 3.0 * std::sqrt(7.0) / 16.0, 1.0 / 16.0};

    CHECK(glued_dist(A, B) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(glued_dist(A, C) == doctest::Approx(std::sqrt(17.0)).epsilon(1e-15));
    CHECK(glued_dist(A, C) == doctest::Approx(4.123105625617661).epsilon(1e-15));

    const double radical = std::sqrt((134.0 + 3.0 * std::sqrt(7.0)) / 8.0);
    CHECK(glued_dist(A, F) == doctest::Approx(radical).epsilon(1e-14));
    CHECK(glued_dist(A, F) > glued_dist(A, C));
}

TEST_CASE("glued_dist restricted to one face is the planar chart distance") {
    Rng rng(21);
    for (int i = 0; i < 5000; ++i) {
        const Point p = rng.glued_point_uniform();
        const Point q = rng.glued_point_uniform();
        const auto& gp = as_glued(p);
        const auto& gq = as_glued(q);
        if (gp.face != gq.face) continue;
        const double du = gp.u - gq.u, dw = gp.w - gq.w;
        REQUIRE(glued_dist(gp, gq) == std::sqrt(du * du + dw * dw));
    }
}

TEST_CASE("glued cross-face: chord unfolding agrees with convex minimization") {
    Rng rng(22);
    int both = 0;
    for (int i = 0; i < 20000 && both < 5000; ++i) {
        const Point p = rng.glued_point_uniform();
        const Point q = rng.glued_point_uniform();
        const auto& gp = as_glued(p);
        const auto& gq = as_glued(q);
        if (gp.face == gq.face) continue;
        const GluedPoint& f1 = gp.face == 1 ? gp : gq;
        const GluedPoint& f2 = gp.face == 1 ? gq : gp;
        const CrossFaceRoute route = glued_cross_route(f1, f2);
        if (!route.chord) continue;
        ++both;
        REQUIRE(std::abs(glued_dist(gp, gq) - glued_cross_dist_minimized(f1, f2)) <= 1e-8);
    }
    CHECK(both > 1000);
}

TEST_CASE("glued_combine: endpoints, the midpoint F, and shortest-path splits") {
    const auto& g = glued_geometry();
    const GluedPoint A{1, g.A1.x, g.A1.y};
    const GluedPoint C{2, 0.0, 0.0};
    const GluedPoint E{2, g.E2.x, g.E2.y};

    CHECK(as_glued(glued_combine(1.0, A, C)).face == 1);
    CHECK(as_glued(glued_combine(1.0, A, C)).u == A.u);

    const Point F = glued_combine(0.5, C, E);
    CHECK(as_glued(F).face == 2);
    CHECK(as_glued(F).u == doctest::Approx(3.0 * std::sqrt(7.0) / 16.0).epsilon(1e-15));
    CHECK(as_glued(F).w == doctest::Approx(1.0 / 16.0).epsilon(1e-15));

    // Midpoint of A and F sits on the unfolded chord; both partial-distance
    // identities pin it.
    const Point M = glued_combine(0.5, A, as_glued(F));
    const double dAF = glued_dist(A, as_glued(F));
    CHECK(std::abs(glued_dist(A, as_glued(M)) - 0.5 * dAF) <= 1e-9);
    CHECK(std::abs(glued_dist(as_glued(M), as_glued(F)) - 0.5 * dAF) <= 1e-9);
}

TEST_CASE("glued_combine: random pairs satisfy the distance split within 1e-9") {
    Rng rng(23);
    for (int i = 0; i < 5000; ++i) {
        const Point p = rng.glued_point_uniform();
        const Point q = rng.glued_point_uniform();
        const double alpha = rng.uniform();
        const double dpq = glued_dist(as_glued(p), as_glued(q));
        if (dpq < 1e-9) continue;
        const Point z = glued_combine(alpha, as_glued(p), as_glued(q));
        REQUIRE(std::abs(glued_dist(as_glued(p), as_glued(z)) - (1 - alpha) * dpq) <= 1e-9);
        REQUIRE(std::abs(glued_dist(as_glued(p), as_glued(z)) +
                         glued_dist(as_glued(z), as_glued(q)) - dpq) <= 1e-9);
    }
}

TEST_CASE("glued space is CAT(0): comparison margin and midpoint inequality") {
    Rng rng(24);
    const Space sp = Space::glued();

    for (int i = 0; i < 10000; ++i) {
        const Point a = rng.glued_point_uniform();
        const Point b = rng.glued_point_uniform();
        const Point c = rng.glued_point_uniform();
        const double m = cat_comparison_check(sp, a, b, c, rng.uniform(), rng.uniform());
        REQUIRE(m >= -1e-9);
    }

    for (int i = 0; i < 10000; ++i) {
        const Point p = rng.glued_point_uniform();
        const Point q = rng.glued_point_uniform();
        const Point z = rng.glued_point_uniform();
        const Point m = glued_combine(0.5, as_glued(p), as_glued(q));
        const double lhs = std::pow(dist(sp, z, m), 2);
        const double rhs = 0.5 * std::pow(dist(sp, z, p), 2) +
                           0.5 * std::pow(dist(sp, z, q), 2) -
                           0.25 * std::pow(dist(sp, p, q), 2);
        REQUIRE(rhs - lhs >= -1e-9);
    }
}

TEST_CASE("n_property_witness reproduces the counterexample") {
    const NPropertyReport r = n_property_witness();

    // F = (0, 3 sqrt(7)/16, 1/16) in its face chart, essentially exactly.
    CHECK(as_glued(r.F).face == 2);
    CHECK(std::abs(as_glued(r.F).u - 3.0 * std::sqrt(7.0) / 16.0) <= 1e-12);
    CHECK(std::abs(as_glued(r.F).w - 1.0 / 16.0) <= 1e-12);

    CHECK(r.d_AC == doctest::Approx(4.123105625617661).epsilon(1e-14));
    CHECK(std::abs(r.d_AF - std::sqrt((134.0 + 3.0 * std::sqrt(7.0)) / 8.0)) <= 1e-9);

    CHECK(r.proj_D_equals_F);
    CHECK(r.proj_A_equals_proj_B);
    CHECK(r.proj_A_differs_from_F);
    CHECK_FALSE(r.F_in_segment_projA_projB);
    CHECK(r.n_property_violated);

    // Projection of D lands at the segment midpoint; A and B project to C.
    CHECK(r.param_D == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(r.param_A == 0.0);
    CHECK(r.param_B == 0.0);

    // The verdict rests on strict inequalities with macroscopic slack, so a
    // 1e-9 perturbation of the geometry cannot flip it.
    CHECK(r.d_AF - r.d_AC > 0.08);
    CHECK(glued_dist(as_glued(r.F), as_glued(r.proj_A)) > 0.49);
}
