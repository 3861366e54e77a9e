#pragma once

#include <helixforge/toolpath.hpp>

#include <cstddef>
#include <span>
#include <variant>

namespace helixforge {

// The ideal curves a point sequence can be checked against. The verifier
// works from the analytic curve alone; it shares no sampling code with the
// toolpath generator.
struct CircleCurve {
    double center_x = 0.0;
    double center_y = 0.0;
    double radius = 0.0;
    double z = 0.0;
};

struct HelixCurve {
    double center_x = 0.0;
    double center_y = 0.0;
    double radius = 0.0;
    double pitch = 0.0;
};

struct EllipticalHelixCurve {
    double center_x = 0.0;
    double center_y = 0.0;
    double semi_major = 0.0;
    double semi_minor = 0.0;
    double pitch = 0.0;
};

using Curve = std::variant<CircleCurve, HelixCurve, EllipticalHelixCurve>;

struct DeviationReport {
    double max_deviation = 0.0;
    std::size_t worst_segment_index = 0;
    int samples_per_segment = 0;
};

// Measures how far the ideal curve strays from the chords of a point
// sequence. Each endpoint's curve parameter is recovered from its
// coordinates; the arc between consecutive parameters is sampled at
// samples_per_segment + 1 evenly spaced parameters (endpoints included)
// and the perpendicular distance from each sample to the chord's carrier
// line is taken. Returns the largest distance found and the segment it
// occurred on.
//
// Throws EmptyToolpath for fewer than two points and DegenerateSegment
// when two consecutive points are exactly equal.
DeviationReport measure_deviation(std::span<const ToolpathPoint> points, const Curve& curve,
                                  int samples_per_segment = 64);

// Smallest segment count m >= 3 whose inscribed regular polygon stays
// within delta of a circle of the given radius: brute-force upward search
// on the exact sagitta radius * (1 - cos(pi/m)), independent of the
// closed-form discretizer.
int oracle_min_count(double radius, double delta);

} // namespace helixforge
