#pragma once

#include <cmath>
#include <limits>
#include <optional>

#include "catk/errors.hpp"
#include "catk/glued.hpp"
#include "catk/point.hpp"

namespace catk {

enum class SpaceKind { plane, sphere, scaled_sphere, glued_example };

// Admissible region of an experiment space: a metric ball (disk on the
// plane, cap on a sphere) in native units.
struct Cap {
    Point center;
    double radius = 0.0;
};

class Space {
  public:
    static Space plane() { return Space(SpaceKind::plane, 0.0, std::nullopt); }

    static Space plane(Point center, double radius) {
        as_planar(center);
        require_positive(radius);
        return Space(SpaceKind::plane, 0.0, Cap{center, radius});
    }

    // Model spaces without an enforced bound (comparison geometry).
    static Space sphere() { return Space(SpaceKind::sphere, 1.0, std::nullopt); }

    static Space scaled_sphere(double kappa) {
        require_kappa(kappa);
        return Space(kappa == 1.0 ? SpaceKind::sphere : SpaceKind::scaled_sphere, kappa,
                     std::nullopt);
    }

    static Space model(double kappa) {
        if (kappa == 0.0) return plane();
        return scaled_sphere(kappa);
    }

    static Space sphere(Point cap_center, double cap_radius) {
        return capped(1.0, cap_center, cap_radius);
    }

    static Space scaled_sphere(double kappa, Point cap_center, double cap_radius) {
        return capped(kappa, cap_center, cap_radius);
    }

    static Space glued() { return Space(SpaceKind::glued_example, 0.0, std::nullopt); }

    SpaceKind kind() const { return kind_; }
    double kappa() const { return kappa_; }
    bool has_cap() const { return cap_.has_value(); }
    const Cap& cap() const {
        if (!cap_) throw domain_error("space has no admissible cap");
        return *cap_;
    }

    // pi / sqrt(kappa); geodesics are unique below this distance.
    double d_kappa() const {
        if (kappa_ == 0.0) return std::numeric_limits<double>::infinity();
        return std::acos(-1.0) / std::sqrt(kappa_);
    }

    // Enforced diameter bound: twice the cap radius when a cap is set.
    double diameter_cap() const {
        if (cap_) return 2.0 * cap_->radius;
        if (kind_ == SpaceKind::glued_example) return glued_diameter();
        return std::numeric_limits<double>::infinity();
    }

    bool sphere_like() const {
        return kind_ == SpaceKind::sphere || kind_ == SpaceKind::scaled_sphere;
    }

    // Variant compatibility only; cap membership is checked separately.
    bool matches(const Point& p) const {
        switch (kind_) {
        case SpaceKind::plane: return is_planar(p);
        case SpaceKind::sphere:
        case SpaceKind::scaled_sphere: return is_spherical(p);
        case SpaceKind::glued_example: return is_glued(p) && glued_contains(as_glued(p));
        }
        return false;
    }

    bool contains(const Point& p, double slack = 1e-9) const;

  private:
    Space(SpaceKind kind, double kappa, std::optional<Cap> cap)
        : kind_(kind), kappa_(kappa), cap_(std::move(cap)) {}

    static Space capped(double kappa, Point center, double radius) {
        require_kappa(kappa);
        as_spherical(center);
        require_positive(radius);
        const double dk = std::acos(-1.0) / std::sqrt(kappa);
        if (!(radius < dk / 4.0))
            throw domain_error("cap radius must stay below D_kappa/4 so the enforced "
                               "diameter stays below D_kappa/2");
        return Space(kappa == 1.0 ? SpaceKind::sphere : SpaceKind::scaled_sphere, kappa,
                     Cap{center, radius});
    }

    static void require_kappa(double kappa) {
        if (!(kappa > 0.0)) throw domain_error("sphere-like space needs kappa > 0");
    }
    static void require_positive(double r) {
        if (!(r > 0.0)) throw domain_error("cap radius must be positive");
    }

    static double glued_diameter();

    SpaceKind kind_;
    double kappa_;
    std::optional<Cap> cap_;
};

} // namespace catk
