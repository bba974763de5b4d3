#include "catk/quadrilateral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "catk/errors.hpp"

namespace catk {

double cat1_dist(const Space& space, const Point& p, const Point& q) {
    if (space.kind() == SpaceKind::scaled_sphere)
        return dist(space, p, q) * std::sqrt(space.kappa());
    return dist(space, p, q);
}

namespace {

constexpr double kMinDenominator = 1e-8;

struct SixDistances {
    double ab, cd, ac, bd, ad, bc;
    double max_pairwise;
};

SixDistances six(const Quadruple& q) {
    SixDistances s{};
    s.ab = cat1_dist(q.space, q.a, q.b);
    s.cd = cat1_dist(q.space, q.c, q.d);
    s.ac = cat1_dist(q.space, q.a, q.c);
    s.bd = cat1_dist(q.space, q.b, q.d);
    s.ad = cat1_dist(q.space, q.a, q.d);
    s.bc = cat1_dist(q.space, q.b, q.c);
    s.max_pairwise = std::max({s.ab, s.cd, s.ac, s.bd, s.ad, s.bc});
    return s;
}

void check_regime(const SixDistances& s, bool cosine_path) {
    if (s.ab < 1e-12 || s.cd < 1e-12)
        throw domain_error("h: degenerate quadruple (A = B or C = D)");
    // The cosine form loses the numerator to cancellation once the
    // denominator is tiny; the sphere form (<A-B, C-D>) does not.
    if (cosine_path && s.ab * s.cd < kMinDenominator)
        throw domain_error("h: near-degenerate quadruple (d(A,B) d(C,D) below 1e-8)");
    if (!(s.max_pairwise < std::numbers::pi / 2.0))
        throw out_of_regime_error("h: a pairwise distance reaches pi/2 on the CAT(1) scale");
}

// On the unit sphere cos d(x, y) = <x, y>, so the h numerator collapses to
// <A - B, C - D>; this form avoids the cosine cancellation for nearby points.
double h_core(const Quadruple& q, const SixDistances& s) {
    double num;
    if (q.space.sphere_like()) {
        const Vec3 u = as_spherical(q.a).v - as_spherical(q.b).v;
        const Vec3 v = as_spherical(q.c).v - as_spherical(q.d).v;
        num = dot(u, v);
    } else {
        num = std::cos(s.ac) + std::cos(s.bd) - std::cos(s.ad) - std::cos(s.bc);
    }
    return num / (s.ab * s.cd);
}

} // namespace

double h(const Quadruple& q) {
    const SixDistances s = six(q);
    check_regime(s, !q.space.sphere_like());
    return h_core(q, s);
}

ScaledH h_rescaled(const Quadruple& q, double target_max) {
    SixDistances s = six(q);
    if (s.max_pairwise <= 0.0) throw domain_error("h_rescaled: all points coincide");
    const double scale = target_max / s.max_pairwise;
    s.ab *= scale;
    s.cd *= scale;
    s.ac *= scale;
    s.bd *= scale;
    s.ad *= scale;
    s.bc *= scale;
    s.max_pairwise = target_max;
    check_regime(s, true);
    const double num = std::cos(s.ac) + std::cos(s.bd) - std::cos(s.ad) - std::cos(s.bc);
    return {num / (s.ab * s.cd), scale};
}

double h_decompose_margin(const Quadruple& q, const Point& x_on_ab) {
    const double dax = cat1_dist(q.space, q.a, x_on_ab);
    const double dxb = cat1_dist(q.space, x_on_ab, q.b);
    const double dab = cat1_dist(q.space, q.a, q.b);
    if (dax < 1e-12 || dxb < 1e-12)
        throw domain_error("h_decompose_margin: X coincides with an endpoint");
    if (std::abs(dax + dxb - dab) > 1e-9)
        throw domain_error("h_decompose_margin: X is not on [A, B]");

    const double lhs = h(q);
    const double h1 = h({q.space, q.a, x_on_ab, q.c, q.d});
    const double h2 = h({q.space, x_on_ab, q.b, q.c, q.d});
    const double rhs = (dax / dab) * h1 + (dxb / dab) * h2;
    return std::abs(lhs - rhs);
}

double h_additivity_margin(const Quadruple& q, int n, int m) {
    if (n < 1 || m < 1) throw domain_error("h_additivity_margin: n, m must be >= 1");

    std::vector<Point> as, cs;
    as.reserve(n + 1);
    cs.reserve(m + 1);
    for (int i = 0; i <= n; ++i)
        as.push_back(geodesic_point(q.space, q.a, q.b, static_cast<double>(i) / n));
    for (int j = 0; j <= m; ++j)
        cs.push_back(geodesic_point(q.space, q.c, q.d, static_cast<double>(j) / m));

    double sum = 0.0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            sum += h({q.space, as[i - 1], as[i], cs[j - 1], cs[j]});

    return std::abs(h(q) - sum / (static_cast<double>(n) * m));
}

HLimitResult h_limit_check(const Point& P, const Point& X, const Point& Q, const Point& Y,
                           double x, double y) {
    const Space sp = Space::sphere();
    const double dpx = dist(sp, P, X);
    const double dqy = dist(sp, Q, Y);
    if (!(x > 0.0 && y > 0.0 && x <= dpx && y <= dqy))
        throw domain_error("h_limit_check: arc lengths must lie in (0, d(P,X)] x (0, d(Q,Y)]");

    const Point Px = geodesic_point(sp, P, X, x / dpx);
    const Point Qy = geodesic_point(sp, Q, Y, y / dqy);

    HLimitResult r;
    r.hval = h({sp, P, Px, Q, Qy});
    r.xi_x = spherical_angle(P, Q, X);
    r.xi_y = std::numbers::pi - spherical_angle(Q, Y, P);
    r.formula = std::sin(r.xi_x) * std::sin(r.xi_y) +
                std::cos(r.xi_x) * std::cos(r.xi_y) * std::cos(dist(sp, P, Q));
    return r;
}

} // namespace catk
