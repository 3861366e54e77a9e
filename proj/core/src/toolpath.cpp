#include <helixforge/toolpath.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace helixforge {

namespace {

constexpr double k_two_pi = 2.0 * std::numbers::pi;

int whole_revolutions(double bore_length, double pitch) {
    if (!(pitch > 0.0)) {
        throw ZeroRevolutions("pitch must be positive, got " + std::to_string(pitch));
    }
    const int revs = static_cast<int>(bore_length / pitch);
    if (revs < 1) {
        throw ZeroRevolutions("bore length " + std::to_string(bore_length) +
                              " is shorter than one revolution at pitch " +
                              std::to_string(pitch));
    }
    return revs;
}

// Shared sampler for circular and elliptical helices. radius_x/radius_y are
// the compensated semi-axes (equal for a circular bore). Identical arithmetic
// on both paths keeps the degenerate ellipse bitwise equal to the circle.
std::vector<ToolpathPoint> sample_revolutions(double radius_x, double radius_y,
                                              double center_x, double center_y,
                                              double pitch, double bore_length,
                                              const Discretization& disc,
                                              bool finish_partial_rev) {
    const int revs = whole_revolutions(bore_length, pitch);
    const int count = disc.count;

    std::vector<ToolpathPoint> points;
    points.reserve(static_cast<std::size_t>(revs) * count + (finish_partial_rev ? count : 0));
    for (int k = 0; k < revs; ++k) {
        for (int i = 0; i < count; ++i) {
            const double theta = i * disc.step_angle;
            points.push_back({radius_x * std::cos(theta) + center_x,
                              radius_y * std::sin(theta) + center_y,
                              k * pitch + (theta / k_two_pi) * pitch});
        }
    }
    if (finish_partial_rev) {
        for (int i = 0;; ++i) {
            const double theta = i * disc.step_angle;
            const double z = revs * pitch + (theta / k_two_pi) * pitch;
            if (z > bore_length) {
                break;
            }
            points.push_back({radius_x * std::cos(theta) + center_x,
                              radius_y * std::sin(theta) + center_y, z});
        }
    }
    return points;
}

} // namespace

void HelixSpec::validate() const {
    if (cutter_diameter < 0.0) {
        throw std::invalid_argument("cutter diameter must not be negative");
    }
    effective_radius(*this); // CutterTooLarge
    ToleranceSpec{effective_radius(*this), tolerance}.validate();
    whole_revolutions(bore_length, pitch);
}

void EllipticalHelixSpec::validate() const {
    if (cutter_diameter < 0.0) {
        throw std::invalid_argument("cutter diameter must not be negative");
    }
    if (!(semi_major >= semi_minor)) {
        throw std::invalid_argument("semi-major axis must not be smaller than semi-minor");
    }
    const double cutter_radius = cutter_diameter / 2.0;
    if (!(semi_minor - cutter_radius > 0.0)) {
        throw CutterTooLarge("cutter radius " + std::to_string(cutter_radius) +
                             " leaves no path inside semi-minor axis " +
                             std::to_string(semi_minor));
    }
    ToleranceSpec{semi_major - cutter_radius, tolerance}.validate();
    whole_revolutions(bore_length, pitch);
}

double effective_radius(const HelixSpec& spec) {
    if (spec.cutter_diameter < 0.0) {
        throw std::invalid_argument("cutter diameter must not be negative");
    }
    const double radius = spec.bore_radius - spec.cutter_diameter / 2.0;
    if (!(radius > 0.0)) {
        throw CutterTooLarge("cutter diameter " + std::to_string(spec.cutter_diameter) +
                             " leaves no path inside bore radius " +
                             std::to_string(spec.bore_radius));
    }
    return radius;
}

std::vector<ToolpathPoint> helix_points(const HelixSpec& spec, bool finish_partial_rev) {
    const double radius = effective_radius(spec);
    const Discretization disc = discretize_count({radius, spec.tolerance});
    return sample_revolutions(radius, radius, spec.center_x, spec.center_y, spec.pitch,
                              spec.bore_length, disc, finish_partial_rev);
}

std::vector<ToolpathPoint> circle_points(double center_x, double center_y, double radius,
                                         double z, double tolerance) {
    const Discretization disc = discretize_count({radius, tolerance});
    std::vector<ToolpathPoint> points;
    points.reserve(static_cast<std::size_t>(disc.count));
    for (int i = 0; i < disc.count; ++i) {
        const double theta = i * disc.step_angle;
        points.push_back({radius * std::cos(theta) + center_x,
                          radius * std::sin(theta) + center_y, z});
    }
    return points;
}

std::vector<ToolpathPoint> elliptical_helix_points(const EllipticalHelixSpec& spec,
                                                   bool finish_partial_rev) {
    if (spec.cutter_diameter < 0.0) {
        throw std::invalid_argument("cutter diameter must not be negative");
    }
    if (!(spec.semi_major >= spec.semi_minor)) {
        throw std::invalid_argument("semi-major axis must not be smaller than semi-minor");
    }
    const double cutter_radius = spec.cutter_diameter / 2.0;
    const double radius_x = spec.semi_major - cutter_radius;
    const double radius_y = spec.semi_minor - cutter_radius;
    if (!(radius_y > 0.0)) {
        throw CutterTooLarge("cutter radius " + std::to_string(cutter_radius) +
                             " leaves no path inside semi-minor axis " +
                             std::to_string(spec.semi_minor));
    }
    const Discretization disc = discretize_count({radius_x, spec.tolerance});
    return sample_revolutions(radius_x, radius_y, spec.center_x, spec.center_y, spec.pitch,
                              spec.bore_length, disc, finish_partial_rev);
}

} // namespace helixforge
