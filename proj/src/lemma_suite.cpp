#include "catk/lemma_suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "catk/geometry.hpp"
#include "catk/quadrilateral.hpp"
#include "catk/rng.hpp"

namespace catk {

namespace {

// Sampling cap: radius 0.7 < pi/4 about the north pole keeps every pairwise
// distance below 1.4 < pi/2 with margin.
constexpr double kCapRadius = 0.7;
const Vec3 kPole{0.0, 0.0, 1.0};

using Clock = std::chrono::steady_clock;

struct Collector {
    SuiteReport rep;
    Clock::time_point start = Clock::now();

    Collector(std::string name, std::int64_t trials, std::uint64_t seed, double tol) {
        rep.name = std::move(name);
        rep.trials = trials;
        rep.seed = seed;
        rep.tolerance = tol;
        rep.worst_margin = std::numeric_limits<double>::infinity();
    }

    void add(std::int64_t trial, double margin, const char* what) {
        if (margin < rep.worst_margin) rep.worst_margin = margin;
        if (margin < -rep.tolerance && rep.failures.size() < 10)
            rep.failures.push_back({trial, margin, what});
    }

    SuiteReport finish() {
        rep.pass = rep.worst_margin >= -rep.tolerance;
        rep.elapsed_seconds =
            std::chrono::duration<double>(Clock::now() - start).count();
        return rep;
    }
};

Point cap_point(Rng& rng) { return SpherePoint{rng.sphere_cap(kPole, kCapRadius)}; }

double sin2_half(double d) {
    const double s = std::sin(d / 2.0);
    return s * s;
}

} // namespace

namespace detail {

SuiteReport lemma_3_1_impl(std::int64_t trials, std::uint64_t seed, Mutation m) {
    const Space sp = Space::sphere();
    Rng rng(seed);
    Collector col("lemma_3_1", trials, seed, 1e-10);
    const double sign = m == Mutation::flipped ? -1.0 : 1.0;

    for (std::int64_t i = 0; i < trials; ++i) {
        const Point x1 = cap_point(rng);
        const Point x2 = cap_point(rng);
        const Point x4 = cap_point(rng);
        const double d24 = dist(sp, x2, x4);
        if (d24 < 1e-6) {
            --i;
            continue;
        }
        const double alpha = rng.uniform();
        const Point x3 = combine(sp, alpha, x2, x4);

        const double lhs = sin2_half(dist(sp, x1, x3));
        const double rhs = (dist(sp, x2, x3) / d24) * sin2_half(dist(sp, x1, x4)) +
                           sign * (dist(sp, x3, x4) / d24) * sin2_half(dist(sp, x1, x2));
        col.add(i, rhs - lhs, "lemma 3.1 margin");
    }
    return col.finish();
}

SuiteReport lemma_3_2_impl(std::int64_t trials, std::uint64_t seed, Mutation m) {
    const Space sp = Space::sphere();
    Rng rng(seed);
    Collector col("lemma_3_2", trials, seed, 1e-10);
    const double sign = m == Mutation::flipped ? -1.0 : 1.0;

    for (std::int64_t i = 0; i < trials; ++i) {
        const Point a = cap_point(rng);
        const Point b = cap_point(rng);
        const Point c = cap_point(rng);
        const double M =
            std::max({dist(sp, a, b), dist(sp, a, c), dist(sp, b, c)});
        if (M < 1e-6) {
            --i;
            continue;
        }
        const double t = rng.uniform();
        // dist(D, C) = (1 - t) dist(A, C): D at arc fraction t from A.
        const Point d = geodesic_point(sp, a, c, t);
        const Point e = geodesic_point(sp, b, c, t);

        const double bound = std::sin((1.0 - t) * M) / std::sin(M) * dist(sp, a, b);
        col.add(i, sign * bound - dist(sp, d, e), "lemma 3.2 margin");
    }
    return col.finish();
}

SuiteReport lemma_3_3_impl(std::int64_t trials, std::uint64_t seed, Mutation m) {
    const Space sp = Space::sphere();
    Rng rng(seed);
    Collector col("lemma_3_3", trials, seed, 1e-10);
    const double sign = m == Mutation::flipped ? -1.0 : 1.0;

    for (std::int64_t i = 0; i < trials; ++i) {
        const Point x1 = cap_point(rng);
        const Point x2 = cap_point(rng);
        const Point x4 = cap_point(rng);
        if (dist(sp, x2, x4) < 1e-6) {
            --i;
            continue;
        }
        const double t = rng.uniform();
        // dist(x3, x4) = t dist(x2, x4): x3 at arc fraction 1 - t from x2.
        const Point x3 = geodesic_point(sp, x2, x4, 1.0 - t);

        const double M = std::max({dist(sp, x1, x2), dist(sp, x1, x3), dist(sp, x1, x4),
                                   dist(sp, x2, x3), dist(sp, x2, x4), dist(sp, x3, x4)});
        if (M < 1e-6) {
            --i;
            continue;
        }

        const double lhs = sin2_half(dist(sp, x1, x3));
        const double rhs =
            std::sin((1.0 - t) * M) / std::sin(M) * sin2_half(dist(sp, x1, x4)) +
            sign * std::sin(t * M) / std::sin(M) *
                std::max(std::cos(dist(sp, x2, x4)) - std::cos(dist(sp, x2, x1)), 0.0) / 2.0 +
            sin2_half(t * M);
        col.add(i, rhs - lhs, "lemma 3.3 margin");
    }
    return col.finish();
}

} // namespace detail

SuiteReport check_lemma_3_1(std::int64_t trials, std::uint64_t seed) {
    return detail::lemma_3_1_impl(trials, seed, detail::Mutation::none);
}
SuiteReport check_lemma_3_2(std::int64_t trials, std::uint64_t seed) {
    return detail::lemma_3_2_impl(trials, seed, detail::Mutation::none);
}
SuiteReport check_lemma_3_3(std::int64_t trials, std::uint64_t seed) {
    return detail::lemma_3_3_impl(trials, seed, detail::Mutation::none);
}

namespace {

SuiteReport h_bound_sphere(std::int64_t trials, std::uint64_t seed) {
    const Space sp = Space::sphere();
    Rng rng(seed);
    Collector col("h_bound_sphere", trials, seed, 1e-9);
    for (std::int64_t i = 0; i < trials; ++i) {
        const Quadruple q{sp, cap_point(rng), cap_point(rng), cap_point(rng), cap_point(rng)};
        if (cat1_dist(sp, q.a, q.b) * cat1_dist(sp, q.c, q.d) < 1e-8) {
            --i;
            continue;
        }
        col.add(i, 1.0 - std::abs(h(q)), "|h| <= 1 on a sphere cap");
    }
    return col.finish();
}

SuiteReport h_bound_glued(std::int64_t trials, std::uint64_t seed) {
    const Space sp = Space::glued();
    Rng rng(seed);
    Collector col("h_bound_glued", trials, seed, 1e-9);
    for (std::int64_t i = 0; i < trials; ++i) {
        const Quadruple q{sp, rng.glued_point_uniform(), rng.glued_point_uniform(),
                          rng.glued_point_uniform(), rng.glued_point_uniform()};
        const double dab = dist(sp, q.a, q.b);
        const double dcd = dist(sp, q.c, q.d);
        if (dab < 1e-3 || dcd < 1e-3) {
            --i;
            continue;
        }
        col.add(i, 1.0 - std::abs(h_rescaled(q).value), "|h| <= 1 on the rescaled glued space");
    }
    return col.finish();
}

SuiteReport h_decomposition(std::int64_t trials, std::uint64_t seed) {
    const Space sp = Space::sphere();
    Rng rng(seed);
    Collector col("h_decomposition", trials, seed, 1e-9);
    for (std::int64_t i = 0; i < trials; ++i) {
        const Quadruple q{sp, cap_point(rng), cap_point(rng), cap_point(rng), cap_point(rng)};
        if (cat1_dist(sp, q.a, q.b) < 1e-3 || cat1_dist(sp, q.c, q.d) < 1e-3) {
            --i;
            continue;
        }
        const Point x = geodesic_point(sp, q.a, q.b, rng.uniform(0.05, 0.95));
        col.add(i, -h_decompose_margin(q, x), "decomposition identity margin");
    }
    return col.finish();
}

SuiteReport h_additivity(std::int64_t trials, std::uint64_t seed) {
    const Space sp = Space::sphere();
    Rng rng(seed);
    Collector col("h_additivity", trials, seed, 1e-8);
    const int parts[] = {1, 2, 4, 8, 16};
    for (std::int64_t i = 0; i < trials; ++i) {
        const Quadruple q{sp, cap_point(rng), cap_point(rng), cap_point(rng), cap_point(rng)};
        if (cat1_dist(sp, q.a, q.b) < 1e-3 || cat1_dist(sp, q.c, q.d) < 1e-3) {
            --i;
            continue;
        }
        for (int n : parts)
            for (int mm : parts)
                col.add(i, -h_additivity_margin(q, n, mm), "partition additivity margin");
    }
    return col.finish();
}

// The fixed spherical configurations of the small-arc limit check: base
// distances crossed with direction-angle pairs covering the meridian,
// mixed, and equatorial cases plus two generic ones.
struct LimitConfig {
    double d, xi_x, xi_y;
};

std::vector<LimitConfig> limit_configs() {
    const double hp = std::numbers::pi / 2.0;
    std::vector<LimitConfig> out;
    for (double d : {0.4, 0.7, 1.0, 1.3})
        for (auto [xx, xy] : {std::pair{hp, hp}, std::pair{hp, 0.0}, std::pair{0.0, 0.0},
                              std::pair{0.7, 2.1}, std::pair{1.2, 0.5}})
            out.push_back({d, xx, xy});
    return out;
}

// Arm endpoints at arc length `arm` from P (resp. Q) in the tangent
// directions prescribed by (xi_x, xi_y), both on the same side of the great
// circle through P and Q.
void limit_points(const LimitConfig& c, double arm, Point& P, Point& X, Point& Q, Point& Y) {
    const Vec3 p{1.0, 0.0, 0.0};
    const Vec3 q{std::cos(c.d), std::sin(c.d), 0.0};
    const Vec3 north{0.0, 0.0, 1.0};
    const Vec3 t_pq{0.0, 1.0, 0.0};                      // direction P -> Q
    const Vec3 t_qp{std::sin(c.d), -std::cos(c.d), 0.0}; // direction Q -> P

    const Vec3 tx = std::cos(c.xi_x) * t_pq + std::sin(c.xi_x) * north;
    const Vec3 ty = -std::cos(c.xi_y) * t_qp + std::sin(c.xi_y) * north;

    P = SpherePoint{p};
    Q = SpherePoint{q};
    X = SpherePoint{normalized(std::cos(arm) * p + std::sin(arm) * tx)};
    Y = SpherePoint{normalized(std::cos(arm) * q + std::sin(arm) * ty)};
}

SuiteReport h_limit(std::uint64_t seed) {
    Collector col("h_limit", 20, seed, 0.0);
    const auto configs = limit_configs();
    std::int64_t idx = 0;
    for (const auto& c : configs) {
        Point P, X, Q, Y;
        limit_points(c, 0.3, P, X, Q, Y);

        std::vector<double> diffs;
        double arc = 1e-2;
        for (int r = 0; r <= 10; ++r, arc *= 0.5) {
            const auto res = h_limit_check(P, X, Q, Y, arc, arc);
            diffs.push_back(std::abs(res.hval - res.formula));
        }

        // Linear envelope calibrated at the largest rung.
        const double C = std::max(diffs.front() / 2e-2, 1e-3) * 1.5;
        double margin = std::numeric_limits<double>::infinity();
        arc = 1e-2;
        for (std::size_t r = 0; r < diffs.size(); ++r, arc *= 0.5)
            margin = std::min(margin, C * 2.0 * arc - diffs[r]);
        // Monotone decrease with 10% slack across the halvings.
        for (std::size_t r = 1; r < diffs.size(); ++r)
            margin = std::min(margin, 1.1 * diffs[r - 1] - diffs[r]);
        // Terminal accuracy.
        margin = std::min(margin, 1e-4 - diffs.back());

        col.add(idx++, margin, "small-arc limit convergence");
    }
    return col.finish();
}

SuiteReport composite(std::string name, std::int64_t trials, std::uint64_t seed,
                      std::vector<SuiteReport> parts) {
    SuiteReport rep;
    rep.name = std::move(name);
    rep.trials = trials;
    rep.seed = seed;
    rep.tolerance = 0.0;
    rep.pass = true;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (auto& p : parts) {
        rep.pass = rep.pass && p.pass;
        rep.worst_margin = std::min(rep.worst_margin, p.worst_margin + p.tolerance);
        rep.elapsed_seconds += p.elapsed_seconds;
    }
    rep.components = std::move(parts);
    return rep;
}

} // namespace

SuiteReport check_h_suite(std::int64_t trials, std::uint64_t seed) {
    std::vector<SuiteReport> parts;
    parts.push_back(h_bound_sphere(trials, seed));
    parts.push_back(h_bound_glued(trials, seed + 1));
    parts.push_back(h_decomposition(std::max<std::int64_t>(1, trials / 10), seed + 2));
    parts.push_back(h_additivity(std::clamp<std::int64_t>(trials / 500, 1, 500), seed + 3));
    parts.push_back(h_limit(seed + 4));
    return composite("h_suite", trials, seed, std::move(parts));
}

std::vector<std::string> suite_names() {
    return {"lemma_3_1", "lemma_3_2", "lemma_3_3", "h_suite"};
}

SuiteReport run_suite(const std::string& name, std::int64_t trials, std::uint64_t seed) {
    if (name == "lemma_3_1") return check_lemma_3_1(trials, seed);
    if (name == "lemma_3_2") return check_lemma_3_2(trials, seed);
    if (name == "lemma_3_3") return check_lemma_3_3(trials, seed);
    if (name == "h_suite") return check_h_suite(trials, seed);
    if (name == "all") {
        std::vector<SuiteReport> parts;
        for (const auto& n : suite_names()) parts.push_back(run_suite(n, trials, seed));
        return composite("all", trials, seed, std::move(parts));
    }
    throw config_error("unknown suite: " + name);
}

} // namespace catk
