#include "cli.hpp"

#include <helixforge/discretize.hpp>
#include <helixforge/errors.hpp>
#include <helixforge/gcode.hpp>
#include <helixforge/toolpath.hpp>
#include <helixforge/verify.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace helixforge::cli {

namespace {

// Floating comparisons run at 1e-9 relative tolerance throughout.
constexpr double k_rel_tol = 1e-9;

const std::map<std::string, Shape>& shape_names() {
    static const std::map<std::string, Shape> names{
        {"circle", Shape::circle},
        {"helix", Shape::helix},
        {"elliptical-helix", Shape::elliptical_helix},
    };
    return names;
}

std::string fixed(double value, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, value);
    return buf;
}

std::string general(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

HelixSpec to_helix_spec(const JobConfig& job) {
    return {job.cutter_diameter, job.center_x, job.center_y, job.radius,
            job.pitch,           job.length,   job.tolerance};
}

EllipticalHelixSpec to_elliptical_spec(const JobConfig& job) {
    return {job.cutter_diameter, job.center_x,   job.center_y, job.semi_major,
            job.semi_minor,      job.pitch,      job.length,   job.tolerance};
}

// Rejects an invalid job before anything is printed or written.
void validate_geometry(const JobConfig& job) {
    switch (job.shape) {
    case Shape::circle:
        ToleranceSpec{effective_radius(to_helix_spec(job)), job.tolerance}.validate();
        return;
    case Shape::helix:
        to_helix_spec(job).validate();
        return;
    case Shape::elliptical_helix:
        to_elliptical_spec(job).validate();
        return;
    }
}

// The compensated radius that drives the point count: the circle/helix
// path radius, or the compensated semi-major axis for an ellipse.
double counting_radius(const JobConfig& job) {
    if (job.shape == Shape::elliptical_helix) {
        const double radius = job.semi_major - job.cutter_diameter / 2.0;
        if (!(radius > 0.0)) {
            throw CutterTooLarge("cutter leaves no path inside the semi-major axis");
        }
        return radius;
    }
    return effective_radius(to_helix_spec(job));
}

std::vector<ToolpathPoint> make_points(const JobConfig& job) {
    switch (job.shape) {
    case Shape::circle:
        return circle_points(job.center_x, job.center_y, effective_radius(to_helix_spec(job)),
                             job.plane_z, job.tolerance);
    case Shape::helix:
        return helix_points(to_helix_spec(job), job.finish_partial_rev);
    case Shape::elliptical_helix:
        return elliptical_helix_points(to_elliptical_spec(job), job.finish_partial_rev);
    }
    throw std::logic_error("unreachable shape");
}

Curve make_curve(const JobConfig& job) {
    switch (job.shape) {
    case Shape::circle:
        return CircleCurve{job.center_x, job.center_y, effective_radius(to_helix_spec(job)),
                           job.plane_z};
    case Shape::helix:
        return HelixCurve{job.center_x, job.center_y, effective_radius(to_helix_spec(job)),
                          job.pitch};
    case Shape::elliptical_helix: {
        const double rc = job.cutter_diameter / 2.0;
        return EllipticalHelixCurve{job.center_x, job.center_y, job.semi_major - rc,
                                    job.semi_minor - rc, job.pitch};
    }
    }
    throw std::logic_error("unreachable shape");
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

// Flat "key = value" job files; '#' starts a comment line.
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoFailure("cannot open config file: " + path);
    }
    std::map<std::string, std::string> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') {
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("malformed config line " + std::to_string(lineno) +
                                        " (expected key=value): " + stripped);
        }
        values[trim(stripped.substr(0, eq))] = trim(stripped.substr(eq + 1));
    }
    return values;
}

// Applies config-file values to the fields behind a subcommand's options.
// A value is skipped when the matching flag (or its environment variable)
// was given — command line wins — or when the key belongs to a different
// subcommand. Keys that belong nowhere are reported by finish().
class ConfigApplier {
public:
    ConfigApplier(const CLI::App* cmd, const std::string& path)
        : cmd_(cmd), values_(read_config_file(path)) {}

    void number(const std::string& key, double& field) {
        apply(key, [&](const std::string& v) {
            std::size_t pos = 0;
            double parsed = 0.0;
            try {
                parsed = std::stod(v, &pos);
            } catch (...) {
                pos = std::string::npos;
            }
            if (pos != v.size()) {
                throw std::invalid_argument("config value for '" + key +
                                            "' is not a number: " + v);
            }
            field = parsed;
        });
    }

    void integer(const std::string& key, int& field, int min, int max) {
        double parsed = static_cast<double>(field);
        bool set = false;
        apply(key, [&](const std::string& v) {
            std::size_t pos = 0;
            try {
                parsed = std::stod(v, &pos);
            } catch (...) {
                pos = std::string::npos;
            }
            if (pos != v.size() || parsed != static_cast<int>(parsed)) {
                throw std::invalid_argument("config value for '" + key +
                                            "' is not an integer: " + v);
            }
            set = true;
        });
        if (set) {
            const int value = static_cast<int>(parsed);
            if (value < min || value > max) {
                throw std::invalid_argument("config value for '" + key + "' must be in [" +
                                            std::to_string(min) + ", " + std::to_string(max) +
                                            "]");
            }
            field = value;
        }
    }

    void boolean(const std::string& key, bool& field) {
        apply(key, [&](const std::string& v) {
            if (v == "1" || v == "true" || v == "yes" || v == "on") {
                field = true;
            } else if (v == "0" || v == "false" || v == "no" || v == "off") {
                field = false;
            } else {
                throw std::invalid_argument("config value for '" + key +
                                            "' is not a boolean: " + v);
            }
        });
    }

    void text(const std::string& key, std::string& field) {
        apply(key, [&](const std::string& v) { field = v; });
    }

    void shape(const std::string& key, Shape& field) {
        apply(key, [&](const std::string& v) {
            const auto it = shape_names().find(v);
            if (it == shape_names().end()) {
                throw std::invalid_argument("config value for '" + key +
                                            "' is not a shape: " + v);
            }
            field = it->second;
        });
    }

    void finish() const {
        if (!values_.empty()) {
            throw std::invalid_argument("unknown config key: " + values_.begin()->first);
        }
    }

private:
    template <typename Fn> void apply(const std::string& key, Fn&& set) {
        const auto it = values_.find(key);
        if (it == values_.end()) {
            return;
        }
        const std::string value = it->second;
        const bool relevant_here = cmd_->get_option_no_throw("--" + key) != nullptr;
        const bool given_on_command_line =
            relevant_here && cmd_->get_option_no_throw("--" + key)->count() > 0;
        values_.erase(it);
        if (relevant_here && !given_on_command_line) {
            set(value);
        }
    }

    const CLI::App* cmd_;
    std::map<std::string, std::string> values_;
};

// Replicates the source dialogue: each prompt printed as a full line, the
// value read as a free-form double.
double prompt_value(const char* prompt) {
    std::cout << prompt << '\n' << std::flush;
    double value = 0.0;
    if (!(std::cin >> value)) {
        throw std::runtime_error("invalid numeric input on standard input");
    }
    return value;
}

void run_interactive_dialogue(JobConfig& job) {
    job.shape = Shape::helix;
    job.cutter_diameter = prompt_value("Enter the cutter dia\n");
    job.center_x = prompt_value("Enter the center for X\n");
    job.center_y = prompt_value("Enter the center for Y\n");
    job.radius = prompt_value("Enter a value for the radius");
    job.pitch = prompt_value("Enter the pitch\n");
    job.length = prompt_value("Enter the length of the bore\n");
    job.tolerance = prompt_value("Enter the tolerance,a small value\n");
}

void print_count_lines(const Discretization& disc, bool with_chord) {
    std::cout << "The number of points is " << disc.count << '\n';
    std::cout << "The angle is " << fixed(disc.step_angle, 6) << '\n';
    if (with_chord) {
        std::cout << "The chord is " << fixed(chord_length(disc), 6) << '\n';
    }
}

std::vector<ToolpathPoint> parse_csv_points(std::istream& in) {
    std::vector<ToolpathPoint> points;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line == "x,y,z") {
            continue;
        }
        std::istringstream row(line);
        std::string field;
        double coords[3];
        for (double& coord : coords) {
            if (!std::getline(row, field, ',')) {
                throw IoFailure("malformed CSV row: " + line);
            }
            coord = std::stod(field);
        }
        points.push_back({coords[0], coords[1], coords[2]});
    }
    return points;
}

std::vector<ToolpathPoint> parse_nc_points(std::istream& in) {
    // Pure axis-move blocks only; header/footer blocks carry other words
    // (G, S, M, F) and are skipped.
    static const std::regex move_re(
        R"(^X(-?[0-9]+(?:\.[0-9]+)?) Y(-?[0-9]+(?:\.[0-9]+)?) Z(-?[0-9]+(?:\.[0-9]+)?)$)");
    std::vector<ToolpathPoint> points;
    std::string line;
    std::smatch m;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (std::regex_match(line, m, move_re)) {
            points.push_back({std::stod(m[1]), std::stod(m[2]), std::stod(m[3])});
        }
    }
    return points;
}

std::vector<ToolpathPoint> load_points(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure("cannot open input file: " + path);
    }
    const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
    return csv ? parse_csv_points(in) : parse_nc_points(in);
}

std::string render_csv(const std::vector<ToolpathPoint>& points, int decimals) {
    std::string out = "x,y,z\n";
    for (const ToolpathPoint& p : points) {
        out += format_axis_value(p.x, decimals);
        out += ',';
        out += format_axis_value(p.y, decimals);
        out += ',';
        out += format_axis_value(p.z, decimals);
        out += '\n';
    }
    return out;
}

std::string render_svg(const std::vector<ToolpathPoint>& points, const JobConfig& job) {
    // viewBox spans the bore diameter plus a 10% margin, centered on the job.
    const double bore_radius = job.shape == Shape::elliptical_helix ? job.semi_major : job.radius;
    const double half = bore_radius * 1.1;
    const int d = job.decimals;
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    svg += format_axis_value(job.center_x - half, d) + " " +
           format_axis_value(job.center_y - half, d) + " " + format_axis_value(2.0 * half, d) +
           " " + format_axis_value(2.0 * half, d) + "\">\n";
    svg += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" +
           general(bore_radius / 50.0) + "\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0) {
            svg += ' ';
        }
        svg += format_axis_value(points[i].x, d) + "," + format_axis_value(points[i].y, d);
    }
    svg += "\"/>\n</svg>\n";
    return svg;
}

void write_text_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoFailure("cannot open output file: " + path);
    }
    out << text;
    out.flush();
    if (!out) {
        throw IoFailure("failed writing output file: " + path);
    }
}

int run_count(const JobConfig& job) {
    const Discretization disc = discretize_count({counting_radius(job), job.tolerance});
    print_count_lines(disc, true);
    return 0;
}

int run_generate(JobConfig& job, bool interactive) {
    if (interactive) {
        run_interactive_dialogue(job);
    }
    job.validate();
    validate_geometry(job);

    const Discretization disc = discretize_count({counting_radius(job), job.tolerance});
    print_count_lines(disc, false);

    const std::vector<ToolpathPoint> points = make_points(job);
    RenderOptions options;
    options.decimals = job.decimals;
    options.start_marker = job.start_marker;
    options.approach_z = job.approach_z;
    options.retract_z = job.retract_z;
    const GCodeProgram program = render_program(points, to_helix_spec(job), options);
    write_program(program, job.output, job.crlf);
    return 0;
}

int run_verify(const JobConfig& job, const std::string& input, int samples) {
    std::vector<ToolpathPoint> points;
    double allowance = job.tolerance * (1.0 + k_rel_tol);
    if (input.empty()) {
        points = make_points(job);
    } else {
        points = load_points(input);
        // File coordinates are quantized to the decimal policy; admit one
        // output quantum of extra deviation.
        allowance += std::pow(10.0, -job.decimals);
    }

    const DeviationReport report = measure_deviation(points, make_curve(job), samples);
    const bool pass = report.max_deviation <= allowance;
    std::cout << "points " << points.size() << '\n';
    std::cout << "max_deviation " << general(report.max_deviation) << '\n';
    std::cout << "worst_segment_index " << report.worst_segment_index << '\n';
    std::cout << "samples_per_segment " << report.samples_per_segment << '\n';
    std::cout << "allowance " << general(allowance) << '\n';
    std::cout << "verdict " << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? 0 : 1;
}

int run_dump(const JobConfig& job, const std::string& output, bool svg) {
    const std::vector<ToolpathPoint> points = make_points(job);
    write_text_output(svg ? render_svg(points, job) : render_csv(points, job.decimals), output);
    return 0;
}

void add_geometry_options(CLI::App* cmd, JobConfig& job) {
    cmd->add_option("--shape", job.shape, "Path shape")
        ->transform(CLI::CheckedTransformer(shape_names(), CLI::ignore_case))
        ->default_str("helix");
    cmd->add_option("--cutter-dia", job.cutter_diameter,
                    "Cutter diameter; the path is offset inward by half of it")
        ->capture_default_str();
    cmd->add_option("--center-x", job.center_x, "Bore center X")->capture_default_str();
    cmd->add_option("--center-y", job.center_y, "Bore center Y")->capture_default_str();
    cmd->add_option("--radius", job.radius, "Bore radius (circle and helix shapes)")
        ->capture_default_str();
    cmd->add_option("--semi-major", job.semi_major, "Ellipse semi-major axis")
        ->capture_default_str();
    cmd->add_option("--semi-minor", job.semi_minor, "Ellipse semi-minor axis")
        ->capture_default_str();
    cmd->add_option("--pitch", job.pitch, "Axial advance per revolution")->capture_default_str();
    cmd->add_option("--length", job.length, "Bore length along Z")->capture_default_str();
    cmd->add_option("--tolerance", job.tolerance, "Maximum chord-to-curve deviation")
        ->capture_default_str();
    cmd->add_option("--z", job.plane_z, "Machining plane height (circle shape)")
        ->capture_default_str();
    cmd->add_flag("--finish-partial-rev", job.finish_partial_rev,
                  "Continue into the final partial revolution instead of stopping at the "
                  "last whole one");
}

CLI::Option* add_decimals_option(CLI::App* cmd, JobConfig& job) {
    return cmd->add_option("--decimals", job.decimals, "Decimal places for emitted coordinates")
        ->envname("HELIXFORGE_DECIMALS")
        ->check(CLI::Range(0, 9))
        ->capture_default_str();
}

} // namespace

void JobConfig::validate() const {
    if (output.empty()) {
        throw std::invalid_argument("output path must be non-empty");
    }
}

int run(int argc, const char* const* argv) {
    CLI::App app{"helixforge: sagitta-tolerance toolpath discretization and G-code emission "
                 "for circular and helical bores. All lengths are unitless machine units."};
    app.require_subcommand(1);

    JobConfig job;
    bool interactive = false;
    std::string input;
    int samples = 64;
    bool svg = false;
    std::string dump_output;
    std::string config_path;

    const auto add_config_option = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path,
                        "Job values as key=value lines; flags take precedence");
    };

    CLI::App* count = app.add_subcommand(
        "count", "Print the point count, step angle, and chord length for a radius/tolerance");
    count->add_option("--radius", job.radius, "Path radius")->capture_default_str();
    count->add_option("--cutter-dia", job.cutter_diameter,
                      "Cutter diameter; the radius is offset inward by half of it")
        ->capture_default_str();
    count->add_option("--tolerance", job.tolerance, "Maximum chord-to-curve deviation")
        ->capture_default_str();
    add_config_option(count);

    CLI::App* generate =
        app.add_subcommand("generate", "Generate toolpath points and write an NC program");
    add_geometry_options(generate, job);
    generate->add_option("-o,--output", job.output, "Output NC file")->capture_default_str();
    add_decimals_option(generate, job);
    generate->add_flag("--crlf", job.crlf, "Terminate NC blocks with CRLF");
    generate->add_option("--start-marker", job.start_marker, "Program start marker block")
        ->capture_default_str();
    generate->add_option("--approach-z", job.approach_z, "Approach height")
        ->capture_default_str();
    generate->add_option("--retract-z", job.retract_z, "Retract height")->capture_default_str();
    generate->add_flag("--interactive", interactive,
                       "Prompt for the job values on standard input");
    add_config_option(generate);

    CLI::App* verify = app.add_subcommand(
        "verify", "Measure worst chord-to-curve deviation of a job or a points file");
    add_geometry_options(verify, job);
    verify->add_option("--input", input,
                       "Verify points from this .nc/.csv file instead of regenerating them");
    verify->add_option("--samples", samples, "Curve samples per segment")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_decimals_option(verify, job);
    add_config_option(verify);

    CLI::App* dump =
        app.add_subcommand("dump", "Write toolpath points as CSV (or an SVG polyline)");
    add_geometry_options(dump, job);
    dump->add_option("-o,--output", dump_output, "Output file (default: standard output)");
    dump->add_flag("--svg", svg, "Emit an SVG polyline of the XY projection instead of CSV");
    add_decimals_option(dump, job);
    add_config_option(dump);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        CLI::App* active = count->parsed()    ? count
                           : generate->parsed() ? generate
                           : verify->parsed()   ? verify
                                                : dump;
        if (!config_path.empty()) {
            ConfigApplier cfg(active, config_path);
            cfg.shape("shape", job.shape);
            cfg.number("cutter-dia", job.cutter_diameter);
            cfg.number("center-x", job.center_x);
            cfg.number("center-y", job.center_y);
            cfg.number("radius", job.radius);
            cfg.number("semi-major", job.semi_major);
            cfg.number("semi-minor", job.semi_minor);
            cfg.number("pitch", job.pitch);
            cfg.number("length", job.length);
            cfg.number("tolerance", job.tolerance);
            cfg.number("z", job.plane_z);
            cfg.boolean("finish-partial-rev", job.finish_partial_rev);
            cfg.integer("decimals", job.decimals, 0, 9);
            cfg.boolean("crlf", job.crlf);
            cfg.text("start-marker", job.start_marker);
            cfg.number("approach-z", job.approach_z);
            cfg.number("retract-z", job.retract_z);
            cfg.text("input", input);
            cfg.integer("samples", samples, 1, std::numeric_limits<int>::max());
            cfg.boolean("svg", svg);
            cfg.text("output", active == dump ? dump_output : job.output);
            cfg.finish();
        }

        if (count->parsed()) {
            return run_count(job);
        }
        if (generate->parsed()) {
            return run_generate(job, interactive);
        }
        if (verify->parsed()) {
            return run_verify(job, input, samples);
        }
        if (dump->parsed()) {
            return run_dump(job, dump_output, svg);
        }
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace helixforge::cli
