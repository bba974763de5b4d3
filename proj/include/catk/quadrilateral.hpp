#pragma once

#include "catk/geometry.hpp"
#include "catk/point.hpp"
#include "catk/space.hpp"

namespace catk {

// Four points feeding the normalized four-point cosine combination
//   h(A,B;C,D) = (cos d(A,C) + cos d(B,D) - cos d(A,D) - cos d(B,C))
//                / (d(A,B) d(C,D)),
// evaluated on the CAT(1) scale (the scaled sphere uses unit-sphere
// distances). |h| <= 1 whenever all pairwise distances stay below pi/2.
struct Quadruple {
    Space space;
    Point a, b, c, d;
};

double h(const Quadruple& q);

// Distance of the quadruple's points on the CAT(1) scale.
double cat1_dist(const Space& space, const Point& p, const Point& q);

// h after multiplying every distance by scale = target_max / (max pairwise
// distance); lets a CAT(0) space enter the CAT(1) regime at a recorded scale.
struct ScaledH {
    double value = 0.0;
    double scale = 1.0;
};
ScaledH h_rescaled(const Quadruple& q, double target_max = 1.0);

// |h(A,B;C,D) - (w h(A,X;C,D) + (1-w) h(X,B;C,D))| for X strictly inside
// [A, B], w = d(A,X)/d(A,B); zero up to rounding.
double h_decompose_margin(const Quadruple& q, const Point& x_on_ab);

// |h(A,B;C,D) - (nm)^-1 sum_ij h(A_{i-1},A_i;C_{j-1},C_j)| over the equal
// arc-length partitions of [A,B] and [C,D].
double h_additivity_margin(const Quadruple& q, int n, int m);

// h(P,P_x;Q,Q_y) for P_x at arc length x from P toward X (resp. y, Q, Y) on
// the unit sphere, together with its x,y -> 0 limit
//   sin(xi_x) sin(xi_y) + cos(xi_x) cos(xi_y) cos d(P,Q),
// xi_x = angle_P(Q,X), xi_y = pi - angle_Q(Y,P). The unsigned angles carry
// an orientation convention: the formula is the limit when the normal
// components of the two arm directions point to the same side of the great
// circle through P and Q (as in all cases of the underlying lemma).
struct HLimitResult {
    double hval = 0.0;
    double formula = 0.0;
    double xi_x = 0.0;
    double xi_y = 0.0;
};
HLimitResult h_limit_check(const Point& P, const Point& X, const Point& Q, const Point& Y,
                           double x, double y);

} // namespace catk
