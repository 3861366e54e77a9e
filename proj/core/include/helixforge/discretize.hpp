#pragma once

#include <helixforge/errors.hpp>

namespace helixforge {

// Input to the discretization: the curve radius and the sagitta tolerance,
// i.e. the largest chord-to-arc deviation the job may leave behind. Both in
// machine units.
struct ToleranceSpec {
    double radius = 0.0;
    double delta = 0.0;

    // Throws InvalidTolerance unless radius > 0 and 0 < delta < radius.
    void validate() const;
};

// Quantities of the inscribed regular polygon a ToleranceSpec pins down:
// picking the apothem a = radius - delta bounds every chord's deviation
// from its arc by delta, and the half-angle theta = arccos(a / radius)
// fixes how many vertices fit in a half turn.
struct Discretization {
    double apothem = 0.0;    // radius - delta
    double height = 0.0;     // half of one chord
    double half_angle = 0.0; // theta, radians
    double step_angle = 0.0; // 2 * theta, angle between consecutive points
    double raw_count = 0.0;  // pi / theta before rounding
    int count = 0;           // points per full turn, >= 3
};

// Derives the full Discretization from a ToleranceSpec.
//
// count is floor(raw_count) + 1 even when raw_count is an exact integer,
// so the realized deviation stays strictly within delta. half_angle is
// computed as arccos(apothem / radius), which stays well-defined as the
// apothem approaches zero (arctan(height / apothem) does not).
//
// Throws InvalidTolerance for an invalid spec, or when delta is too small
// to resolve at this radius in double precision.
Discretization discretize_count(const ToleranceSpec& spec);

// Maximum deviation between chord and arc for a regular count-gon
// inscribed in a circle of the given radius: radius * (1 - cos(pi/count)).
// Throws InvalidCount when count < 3, InvalidTolerance when radius <= 0.
double sagitta(double radius, int count);

// Full chord length between consecutive points, 2 * height.
double chord_length(const Discretization& disc);

} // namespace helixforge
