#pragma once

#include <helixforge/discretize.hpp>

#include <vector>

namespace helixforge {

// One sample on the programmed curve, machine units.
struct ToolpathPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool operator==(const ToolpathPoint&) const = default;
};

// A helical boring job. bore_radius is the finished bore the tool edge
// must produce; the programmed path runs at bore_radius - cutter_diameter/2.
struct HelixSpec {
    double cutter_diameter = 0.0; // 0 means no compensation
    double center_x = 0.0;
    double center_y = 0.0;
    double bore_radius = 0.0;
    double pitch = 0.0; // axial advance per revolution
    double bore_length = 0.0;
    double tolerance = 0.0;

    void validate() const;
};

// Elliptical variant: the tool center tracks an ellipse with both semi-axes
// pulled in by the cutter radius.
struct EllipticalHelixSpec {
    double cutter_diameter = 0.0;
    double center_x = 0.0;
    double center_y = 0.0;
    double semi_major = 0.0;
    double semi_minor = 0.0;
    double pitch = 0.0;
    double bore_length = 0.0;
    double tolerance = 0.0;

    void validate() const;
};

// bore_radius - cutter_diameter/2. Throws CutterTooLarge when the result
// is not positive.
double effective_radius(const HelixSpec& spec);

// Samples the helix as full revolutions of count points each, K = the
// whole number of revolutions fitting in bore_length. Points within a
// revolution sit at theta_i = i * step_angle; z advances linearly with
// theta at the given pitch. Each revolution restarts at theta = 0, so the
// closing chord of a revolution is shorter than the rest (the seam).
//
// The fractional remainder of bore_length beyond K full revolutions is
// dropped, matching the truncating revolution count. Pass
// finish_partial_rev = true to append the partial revolution, stopping
// before the first point whose z would exceed bore_length.
std::vector<ToolpathPoint> helix_points(const HelixSpec& spec,
                                        bool finish_partial_rev = false);

// Planar special case: one revolution at constant z, no cutter
// compensation. The closing chord back to the first point subtends at
// most step_angle, so it meets the same deviation bound.
std::vector<ToolpathPoint> circle_points(double center_x, double center_y,
                                         double radius, double z,
                                         double tolerance);

// Same loop structure as helix_points with per-axis compensated radii.
// The point count comes from the compensated semi-major axis, the
// largest-radius (conservative) choice; with semi_major == semi_minor the
// output is coordinate-for-coordinate identical to helix_points.
std::vector<ToolpathPoint> elliptical_helix_points(const EllipticalHelixSpec& spec,
                                                   bool finish_partial_rev = false);

} // namespace helixforge
