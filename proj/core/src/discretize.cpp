#include <helixforge/discretize.hpp>

#include <cmath>
#include <numbers>

namespace helixforge {

void ToleranceSpec::validate() const {
    if (!(radius > 0.0)) {
        throw InvalidTolerance("radius must be positive, got " + std::to_string(radius));
    }
    if (!(delta > 0.0)) {
        throw InvalidTolerance("tolerance must be positive, got " + std::to_string(delta));
    }
    if (!(delta < radius)) {
        throw InvalidTolerance("tolerance must be smaller than the radius (" +
                               std::to_string(delta) + " >= " + std::to_string(radius) + ")");
    }
}

Discretization discretize_count(const ToleranceSpec& spec) {
    spec.validate();

    Discretization disc;
    disc.apothem = spec.radius - spec.delta;
    // r^2 - a^2 factored as (r - a)(r + a); immune to cancellation for small delta.
    disc.height = std::sqrt((spec.radius - disc.apothem) * (spec.radius + disc.apothem));
    disc.half_angle = std::acos(disc.apothem / spec.radius);
    if (disc.half_angle <= 0.0) {
        throw InvalidTolerance("tolerance too small to resolve at this radius");
    }
    disc.step_angle = 2.0 * disc.half_angle;
    disc.raw_count = std::numbers::pi / disc.half_angle;
    disc.count = static_cast<int>(disc.raw_count) + 1;
    if (disc.count < 3) {
        disc.count = 3; // a polygon needs at least three vertices
    }
    return disc;
}

double sagitta(double radius, int count) {
    if (!(radius > 0.0)) {
        throw InvalidTolerance("radius must be positive, got " + std::to_string(radius));
    }
    if (count < 3) {
        throw InvalidCount("point count must be at least 3, got " + std::to_string(count));
    }
    return radius * (1.0 - std::cos(std::numbers::pi / count));
}

double chord_length(const Discretization& disc) {
    return 2.0 * disc.height;
}

} // namespace helixforge
