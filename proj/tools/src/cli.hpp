#pragma once

#include <string>

namespace helixforge::cli {

enum class Shape { circle, helix, elliptical_helix };

// Everything one invocation needs: the job geometry, where the output
// goes, and how numbers are rendered. Defaults describe a 10-radius,
// pitch-2, length-6 bore at tolerance 0.1 with no cutter compensation.
struct JobConfig {
    Shape shape = Shape::helix;
    double cutter_diameter = 0.0;
    double center_x = 0.0;
    double center_y = 0.0;
    double radius = 10.0;
    double semi_major = 10.0;
    double semi_minor = 6.0;
    double pitch = 2.0;
    double length = 6.0;
    double tolerance = 0.1;
    double plane_z = 0.0; // circle shape: machining plane height
    bool finish_partial_rev = false;

    std::string output = "TestHelix.nc";
    int decimals = 3;
    bool crlf = false;
    std::string start_marker = "%";
    double approach_z = 20.0;
    double retract_z = 100.0;

    void validate() const; // output path non-empty
};

int run(int argc, const char* const* argv);

} // namespace helixforge::cli
