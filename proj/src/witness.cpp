#include <cmath>

#include "catk/glued.hpp"
#include "catk/projections.hpp"

namespace catk {

namespace {

bool same_glued_point(const Point& p, const Point& q, double tol) {
    return glued_dist(as_glued(p), as_glued(q)) <= tol;
}

} // namespace

NPropertyReport n_property_witness() {
    const auto& g = glued_geometry();
    const Space sp = Space::glued();

    NPropertyReport r;
    r.A = glued_point(1, g.A1.x, g.A1.y);
    r.B = glued_point(1, g.B1.x, g.B1.y);
    r.C = glued_point(2, g.C2.x, g.C2.y);
    r.D = glued_point(2, g.D2.x, g.D2.y); // = midpoint of [A, B], on the shared edge
    r.E = glued_point(2, g.E2.x, g.E2.y);
    r.F = glued_combine(0.5, as_glued(r.C), as_glued(r.E));

    const GeodesicSegment ce = make_segment(sp, r.C, r.E);

    const ProjectionResult pd = project_segment(ce, r.D);
    const ProjectionResult pa = project_segment(ce, r.A);
    const ProjectionResult pb = project_segment(ce, r.B);
    r.proj_D = pd.point;
    r.proj_A = pa.point;
    r.proj_B = pb.point;
    r.param_D = pd.parameter;
    r.param_A = pa.parameter;
    r.param_B = pb.parameter;
    r.dist_D = pd.distance;
    r.dist_A = pa.distance;
    r.dist_B = pb.distance;

    r.d_AC = glued_dist(as_glued(r.A), as_glued(r.C));
    r.d_AF = glued_dist(as_glued(r.A), as_glued(r.F));

    const double tol = 1e-9;
    r.proj_D_equals_F = same_glued_point(pd.point, r.F, tol);
    r.proj_A_equals_proj_B = same_glued_point(pa.point, pb.point, tol);
    r.proj_A_differs_from_F = !same_glued_point(pa.point, r.F, tol);

    const double pa_pb = glued_dist(as_glued(pa.point), as_glued(pb.point));
    if (pa_pb <= tol) {
        r.F_in_segment_projA_projB = same_glued_point(r.F, pa.point, tol);
    } else {
        const GeodesicSegment papb = make_segment(sp, pa.point, pb.point);
        r.F_in_segment_projA_projB = project_segment(papb, r.F).distance <= tol;
    }

    r.n_property_violated = r.proj_D_equals_F && r.proj_A_equals_proj_B &&
                            r.proj_A_differs_from_F && !r.F_in_segment_projA_projB;
    return r;
}

} // namespace catk
