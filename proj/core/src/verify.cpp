#include <helixforge/verify.hpp>

#include <helixforge/discretize.hpp>
#include <helixforge/errors.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace helixforge {

namespace {

constexpr double k_two_pi = 2.0 * std::numbers::pi;

struct Vec3 {
    double x, y, z;
};

Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const Vec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

Vec3 as_vec(const ToolpathPoint& p) { return {p.x, p.y, p.z}; }

// Distance from a point to the infinite line through p0 with direction d
// (the chord's carrier line); the chord is never extended or clamped, the
// perpendicular foot may fall outside the segment.
double line_distance(const Vec3& sample, const Vec3& p0, const Vec3& d, double d_len) {
    return norm(cross(sample - p0, d)) / d_len;
}

// Recovers the curve parameter of a point and evaluates the curve at a
// parameter, per curve kind. The angular parameter of a helix endpoint is
// unwrapped onto its revolution by rounding z / pitch - t / (2 pi).
struct CurveOps {
    const Curve& curve;

    double parameter(const ToolpathPoint& p) const {
        return std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, CircleCurve>) {
                    return std::atan2(p.y - c.center_y, p.x - c.center_x);
                } else if constexpr (std::is_same_v<T, HelixCurve>) {
                    const double t = std::atan2(p.y - c.center_y, p.x - c.center_x);
                    const double k = std::round(p.z / c.pitch - t / k_two_pi);
                    return t + k_two_pi * k;
                } else {
                    const double t = std::atan2((p.y - c.center_y) / c.semi_minor,
                                                (p.x - c.center_x) / c.semi_major);
                    const double k = std::round(p.z / c.pitch - t / k_two_pi);
                    return t + k_two_pi * k;
                }
            },
            curve);
    }

    Vec3 evaluate(double theta) const {
        return std::visit(
            [&](const auto& c) -> Vec3 {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, CircleCurve>) {
                    return {c.center_x + c.radius * std::cos(theta),
                            c.center_y + c.radius * std::sin(theta), c.z};
                } else if constexpr (std::is_same_v<T, HelixCurve>) {
                    return {c.center_x + c.radius * std::cos(theta),
                            c.center_y + c.radius * std::sin(theta),
                            theta / k_two_pi * c.pitch};
                } else {
                    return {c.center_x + c.semi_major * std::cos(theta),
                            c.center_y + c.semi_minor * std::sin(theta),
                            theta / k_two_pi * c.pitch};
                }
            },
            curve);
    }

    bool is_planar() const { return std::holds_alternative<CircleCurve>(curve); }
};

void validate_curve(const Curve& curve) {
    std::visit(
        [](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, CircleCurve>) {
                if (!(c.radius > 0.0)) {
                    throw std::invalid_argument("curve radius must be positive");
                }
            } else if constexpr (std::is_same_v<T, HelixCurve>) {
                if (!(c.radius > 0.0)) {
                    throw std::invalid_argument("curve radius must be positive");
                }
                if (!(c.pitch > 0.0)) {
                    throw std::invalid_argument("curve pitch must be positive");
                }
            } else {
                if (!(c.semi_minor > 0.0) || !(c.semi_major >= c.semi_minor)) {
                    throw std::invalid_argument(
                        "curve semi-axes must satisfy semi_major >= semi_minor > 0");
                }
                if (!(c.pitch > 0.0)) {
                    throw std::invalid_argument("curve pitch must be positive");
                }
            }
        },
        curve);
}

} // namespace

DeviationReport measure_deviation(std::span<const ToolpathPoint> points, const Curve& curve,
                                  int samples_per_segment) {
    if (points.size() < 2) {
        throw EmptyToolpath("deviation needs at least two points");
    }
    if (samples_per_segment < 1) {
        throw std::invalid_argument("samples_per_segment must be at least 1");
    }
    validate_curve(curve);

    const CurveOps ops{curve};
    DeviationReport report;
    report.samples_per_segment = samples_per_segment;

    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const ToolpathPoint& a = points[i];
        const ToolpathPoint& b = points[i + 1];
        if (a == b) {
            throw DegenerateSegment("consecutive points " + std::to_string(i) + " and " +
                                    std::to_string(i + 1) + " coincide");
        }

        double theta0 = ops.parameter(a);
        double theta1 = ops.parameter(b);
        if (ops.is_planar()) {
            // atan2 folds circle parameters into (-pi, pi]; walk forward.
            while (theta1 <= theta0) {
                theta1 += k_two_pi;
            }
        }

        const Vec3 p0 = as_vec(a);
        const Vec3 d = as_vec(b) - p0;
        const double d_len = norm(d);
        const double span = theta1 - theta0;
        for (int j = 0; j <= samples_per_segment; ++j) {
            const double theta =
                theta0 + span * (static_cast<double>(j) / static_cast<double>(samples_per_segment));
            const double dist = line_distance(ops.evaluate(theta), p0, d, d_len);
            if (dist > report.max_deviation) {
                report.max_deviation = dist;
                report.worst_segment_index = i;
            }
        }
    }
    return report;
}

int oracle_min_count(double radius, double delta) {
    ToleranceSpec{radius, delta}.validate();
    for (int m = 3;; ++m) {
        const double sag = radius * (1.0 - std::cos(std::numbers::pi / static_cast<double>(m)));
        if (sag <= delta) {
            return m;
        }
    }
}

} // namespace helixforge
