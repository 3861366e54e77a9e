#include <doctest.h>

#include <helixforge/discretize.hpp>
#include <helixforge/errors.hpp>
#include <helixforge/toolpath.hpp>
#include <helixforge/verify.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace helixforge;

namespace {

constexpr double k_pi = std::numbers::pi;

// All deviation-vs-tolerance comparisons allow 1e-9 relative slack: the
// sampler realizes the tolerance exactly at chord midpoints, so the
// measured maximum can exceed delta by a few ulps.
bool within(double measured, double delta) { return measured <= delta * (1.0 + 1e-9); }

std::vector<ToolpathPoint> regular_polygon(double radius, int n) {
    std::vector<ToolpathPoint> points;
    for (int i = 0; i <= n; ++i) { // closed: repeat the first vertex
        const double theta = 2.0 * k_pi * i / n;
        points.push_back({radius * std::cos(theta), radius * std::sin(theta), 0.0});
    }
    return points;
}

} // namespace

TEST_CASE("a regular polygon's measured deviation is its sagitta") {
    const double radius = 5.0;
    const int n = 8;
    const auto points = regular_polygon(radius, n);
    const DeviationReport report =
        measure_deviation(points, CircleCurve{0.0, 0.0, radius, 0.0}, 64);
    CHECK(report.max_deviation == doctest::Approx(sagitta(radius, n)).epsilon(1e-12));
    CHECK(report.samples_per_segment == 64);
}

TEST_CASE("odd sample counts straddle the midpoint and undershoot slightly") {
    const auto points = regular_polygon(2.0, 6);
    const double exact = sagitta(2.0, 6);
    const DeviationReport report = measure_deviation(points, CircleCurve{0.0, 0.0, 2.0, 0.0}, 63);
    CHECK(report.max_deviation <= exact);
    CHECK(report.max_deviation == doctest::Approx(exact).epsilon(1e-3));
}

TEST_CASE("circle points stay within the requested tolerance") {
    const double delta = 0.1;
    const auto points = circle_points(0.0, 0.0, 10.0, 0.0, delta);
    const DeviationReport report =
        measure_deviation(points, CircleCurve{0.0, 0.0, 10.0, 0.0}, 64);
    CHECK(within(report.max_deviation, delta));
    // The spacing realizes the tolerance, so the bound is tight.
    CHECK(report.max_deviation > 0.0999);
}

TEST_CASE("circle measurement is translation invariant") {
    const double delta = 0.05;
    const auto points = circle_points(100.0, -40.0, 3.0, 7.0, delta);
    const DeviationReport report =
        measure_deviation(points, CircleCurve{100.0, -40.0, 3.0, 7.0}, 64);
    CHECK(within(report.max_deviation, delta));
}

TEST_CASE("reference helix job meets its tolerance") {
    const HelixSpec job{10.0, 0.0, 0.0, 10.0, 2.0, 6.0, 0.1};
    const auto points = helix_points(job);
    const DeviationReport report =
        measure_deviation(points, HelixCurve{0.0, 0.0, 5.0, 2.0}, 256);
    CHECK(within(report.max_deviation, 0.1));
    CHECK(report.worst_segment_index < points.size() - 1);
    CHECK(report.samples_per_segment == 256);
}

TEST_CASE("parameter recovery spans revolutions, including the seam") {
    // A tight-tolerance helix: if revolution unwrapping mixed up k, seam
    // segments would measure enormous deviations.
    const HelixSpec job{0.0, 2.0, -1.0, 4.0, 0.5, 2.5, 0.001};
    const auto points = helix_points(job);
    const DeviationReport report =
        measure_deviation(points, HelixCurve{2.0, -1.0, 4.0, 0.5}, 64);
    CHECK(within(report.max_deviation, 0.001));
}

TEST_CASE("deviation grows when the wrong curve is supplied") {
    const auto points = circle_points(0.0, 0.0, 10.0, 0.0, 0.01);
    const DeviationReport report =
        measure_deviation(points, CircleCurve{0.0, 0.0, 11.0, 0.0}, 64);
    CHECK(report.max_deviation > 0.5);
}

TEST_CASE("elliptical helix at the reference eccentricity stays within tolerance") {
    const EllipticalHelixSpec spec{0.0, 0.0, 0.0, 10.0, 6.0, 2.0, 6.0, 0.1};
    const auto points = elliptical_helix_points(spec);
    const DeviationReport report =
        measure_deviation(points, EllipticalHelixCurve{0.0, 0.0, 10.0, 6.0, 2.0}, 256);
    CHECK(within(report.max_deviation, 0.1));
    // The count from the semi-major axis is conservative but not wasteful:
    // the bound is realized to within a few percent.
    CHECK(report.max_deviation > 0.05);
}

TEST_CASE("worst segment index points at a genuine offender") {
    // Perturb one interior point of a tight circle outward; its two
    // segments must host the maximum.
    auto points = circle_points(0.0, 0.0, 10.0, 0.0, 0.001);
    const std::size_t victim = points.size() / 2;
    points[victim].x *= 1.01;
    points[victim].y *= 1.01;
    const DeviationReport report =
        measure_deviation(points, CircleCurve{0.0, 0.0, 10.0, 0.0}, 64);
    const bool at_victim =
        report.worst_segment_index == victim || report.worst_segment_index + 1 == victim;
    CHECK(at_victim);
    CHECK(report.max_deviation > 0.001);
}

TEST_CASE("degenerate segments are rejected") {
    const std::vector<ToolpathPoint> points{{1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
    CHECK_THROWS_AS(measure_deviation(points, CircleCurve{0.0, 0.0, 1.0, 0.0}, 8),
                    DegenerateSegment);
}

TEST_CASE("measurement input validation") {
    const std::vector<ToolpathPoint> one{{1.0, 0.0, 0.0}};
    const std::vector<ToolpathPoint> two{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
    CHECK_THROWS_AS(measure_deviation({}, CircleCurve{0.0, 0.0, 1.0, 0.0}, 8), EmptyToolpath);
    CHECK_THROWS_AS(measure_deviation(one, CircleCurve{0.0, 0.0, 1.0, 0.0}, 8), EmptyToolpath);
    CHECK_THROWS_AS(measure_deviation(two, CircleCurve{0.0, 0.0, 1.0, 0.0}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(measure_deviation(two, CircleCurve{0.0, 0.0, -1.0, 0.0}, 8),
                    std::invalid_argument);
    CHECK_THROWS_AS(measure_deviation(two, HelixCurve{0.0, 0.0, 1.0, 0.0}, 8),
                    std::invalid_argument);
    CHECK_THROWS_AS(measure_deviation(two, EllipticalHelixCurve{0.0, 0.0, 1.0, 2.0, 1.0}, 8),
                    std::invalid_argument);
}

TEST_CASE("oracle minimum counts at pinned anchors") {
    CHECK(oracle_min_count(1.0, 0.5) == 3);
    CHECK(oracle_min_count(10.0, 0.1) == 23);
    CHECK(oracle_min_count(1.0, 1.0 - std::cos(k_pi / 6.0)) == 6);
    CHECK(oracle_min_count(1.0, 1.0 - std::cos(k_pi / 4.0)) == 4);
}

TEST_CASE("oracle count is minimal by construction") {
    for (const double delta : {0.3, 0.05, 0.007}) {
        const double radius = 4.2;
        const int m = oracle_min_count(radius, delta);
        CHECK(sagitta(radius, m) <= delta);
        if (m > 3) {
            CHECK(sagitta(radius, m - 1) > delta);
        }
    }
}

TEST_CASE("closed-form count stays within one of the oracle") {
    for (const double delta : {0.4, 0.11, 0.036, 0.0005}) {
        const int count = discretize_count({2.0, delta}).count;
        const int oracle = oracle_min_count(2.0, delta);
        const bool near = count == oracle || count == oracle + 1;
        CHECK(near);
    }
}

TEST_CASE("oracle input validation") {
    CHECK_THROWS_AS(oracle_min_count(0.0, 0.1), InvalidTolerance);
    CHECK_THROWS_AS(oracle_min_count(1.0, 0.0), InvalidTolerance);
    CHECK_THROWS_AS(oracle_min_count(1.0, 1.5), InvalidTolerance);
}
