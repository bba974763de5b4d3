#pragma once

#include <cstdint>
#include <random>

#include "catk/geometry.hpp"
#include "catk/glued.hpp"
#include "catk/point.hpp"

namespace catk {

// All randomness flows from a single 64-bit seed. Uniform doubles are
// derived from the raw 64-bit stream directly so results do not depend on
// the standard library's distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t raw() { return gen_(); }

    // Uniform point of the spherical cap of the given angular radius.
    Vec3 sphere_cap(const Vec3& pole, double radius) {
        const double z = 1.0 - uniform() * (1.0 - std::cos(radius));
        const double phi = uniform(0.0, 2.0 * std::acos(-1.0));
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        const Vec3 local{s * std::cos(phi), s * std::sin(phi), z};
        return rotate_pole(local, pole);
    }

    // Uniform point of a planar disk.
    Vec2 disk(const Vec2& center, double radius) {
        const double r = radius * std::sqrt(uniform());
        const double phi = uniform(0.0, 2.0 * std::acos(-1.0));
        return {center.x + r * std::cos(phi), center.y + r * std::sin(phi)};
    }

    // Uniform point of the glued complex (faces weighted by area).
    Point glued_point_uniform() {
        const auto& g = glued_geometry();
        const double area1 = 4.0;                            // triangle(A, B, C)
        const double area2 = 3.0 * std::sqrt(7.0) / 4.0;     // triangle(C, D, E)
        const bool face1 = uniform() * (area1 + area2) < area1;
        const Vec2 v1 = face1 ? g.A1 : g.C2;
        const Vec2 v2 = face1 ? g.B1 : g.D2;
        const Vec2 v3 = face1 ? g.C1 : g.E2;
        const double r1 = std::sqrt(uniform());
        const double r2 = uniform();
        const double l1 = 1.0 - r1;
        const double l2 = r1 * (1.0 - r2);
        const double l3 = r1 * r2;
        const double u = l1 * v1.x + l2 * v2.x + l3 * v3.x;
        const double w = l1 * v1.y + l2 * v2.y + l3 * v3.y;
        return glued_point(face1 ? 1 : 2, u, w);
    }

    // Uniform point of the admissible region of an experiment space.
    Point in_space(const Space& space) {
        switch (space.kind()) {
        case SpaceKind::plane: {
            const auto& c = as_planar(space.cap().center);
            const Vec2 p = disk({c.x, c.y}, space.cap().radius);
            return planar(p.x, p.y);
        }
        case SpaceKind::sphere:
        case SpaceKind::scaled_sphere: {
            const Vec3 pole = as_spherical(space.cap().center).v;
            const double angular = space.cap().radius * std::sqrt(space.kappa());
            return SpherePoint{sphere_cap(pole, angular)};
        }
        case SpaceKind::glued_example: return glued_point_uniform();
        }
        throw domain_error("unknown space kind");
    }

  private:
    static Vec3 rotate_pole(const Vec3& local, const Vec3& pole) {
        const Vec3 zhat{0.0, 0.0, 1.0};
        const double c = dot(zhat, pole);
        if (c > 1.0 - 1e-15) return local;
        if (c < -1.0 + 1e-15) return {local.x, -local.y, -local.z};
        const Vec3 axis = normalized(cross(zhat, pole));
        return detail::rotate_about(local, axis, std::acos(c));
    }

    std::mt19937_64 gen_;
};

} // namespace catk
