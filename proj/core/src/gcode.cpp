#include <helixforge/gcode.hpp>

#include <helixforge/errors.hpp>

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <utility>

namespace helixforge {

namespace {

unsigned long long pow10_ull(int n) {
    unsigned long long p = 1;
    for (int i = 0; i < n; ++i) {
        p *= 10ull;
    }
    return p;
}

// Fixed literal spellings for the stock approach/retract heights; overridden
// heights fall back to the regular axis format.
std::string spell_height(double value, double stock_value, const char* stock_spelling,
                         int decimals) {
    if (value == stock_value) {
        return stock_spelling;
    }
    return format_axis_value(value, decimals);
}

} // namespace

std::string format_axis_value(double value, int decimals) {
    if (decimals < 0 || decimals > 12) {
        throw std::invalid_argument("decimals must be in [0, 12]");
    }
    if (!std::isfinite(value)) {
        throw std::invalid_argument("axis value must be finite");
    }
    const double scaled = std::round(value * static_cast<double>(pow10_ull(decimals)));
    if (!(std::fabs(scaled) < 9.0e18)) {
        throw std::invalid_argument("axis value out of range");
    }
    const auto total = static_cast<long long>(scaled);
    const bool negative = total < 0; // an exact zero never keeps its sign
    const auto magnitude =
        negative ? 0ull - static_cast<unsigned long long>(total)
                 : static_cast<unsigned long long>(total);
    const unsigned long long divisor = pow10_ull(decimals);
    const unsigned long long whole = magnitude / divisor;
    const unsigned long long frac = magnitude % divisor;

    std::string out;
    if (negative) {
        out += '-';
    }
    out += std::to_string(whole);
    if (decimals > 0) {
        const std::string digits = std::to_string(frac);
        out += '.';
        out.append(static_cast<std::size_t>(decimals) - digits.size(), '0');
        out += digits;
    }
    return out;
}

Block Block::literal(std::string line) {
    Block b;
    b.is_literal_ = true;
    b.text_ = std::move(line);
    return b;
}

Block Block::move(std::optional<double> x, std::optional<double> y, std::optional<double> z,
                  std::optional<double> f) {
    Block b;
    b.is_literal_ = false;
    b.x_ = x;
    b.y_ = y;
    b.z_ = z;
    b.f_ = f;
    return b;
}

std::string Block::render(int decimals) const {
    if (is_literal_) {
        return text_;
    }
    std::string out;
    auto word = [&](char letter, double value, int places) {
        if (!out.empty()) {
            out += ' ';
        }
        out += letter;
        out += format_axis_value(value, places);
    };
    if (x_) {
        word('X', *x_, decimals);
    }
    if (y_) {
        word('Y', *y_, decimals);
    }
    if (z_) {
        word('Z', *z_, decimals);
    }
    if (f_) {
        word('F', *f_, 0); // feed words are whole numbers
    }
    return out;
}

std::string GCodeProgram::render_text(bool crlf) const {
    const char* eol = crlf ? "\r\n" : "\n";
    std::string out;
    for (const Block& block : blocks) {
        out += block.render(decimals);
        out += eol;
    }
    return out;
}

GCodeProgram render_program(std::span<const ToolpathPoint> points, const HelixSpec& spec,
                            const RenderOptions& options) {
    if (points.empty()) {
        throw EmptyToolpath("cannot render a program with no toolpath points");
    }

    GCodeProgram program;
    program.decimals = options.decimals;
    program.blocks.reserve(points.size() + 8);

    const std::string cx = format_axis_value(spec.center_x, options.decimals);
    const std::string cy = format_axis_value(spec.center_y, options.decimals);

    program.blocks.push_back(Block::literal(options.start_marker));
    program.blocks.push_back(Block::literal("G54 G17 G40 G80 G90"));
    program.blocks.push_back(Block::literal("S1000 M03"));
    program.blocks.push_back(Block::literal(
        "G01 Z" + spell_height(options.retract_z, 100.0, "100.", options.decimals) + " F1000"));
    program.blocks.push_back(Block::literal(
        "X" + cx + " Y" + cy + " Z" +
        spell_height(options.approach_z, 20.0, "20.00", options.decimals) + " F3000"));
    for (const ToolpathPoint& p : points) {
        program.blocks.push_back(Block::move(p.x, p.y, p.z));
    }
    program.blocks.push_back(Block::move(spec.center_x, spec.center_y, {}, 1000.0));
    program.blocks.push_back(Block::literal(
        "Z" + spell_height(options.retract_z, 100.0, "100.000", options.decimals)));
    program.blocks.push_back(Block::literal("M30"));
    return program;
}

void write_program(const GCodeProgram& program, const std::filesystem::path& path, bool crlf) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoFailure("cannot open output file: " + path.string());
    }
    const std::string text = program.render_text(crlf);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) {
        throw IoFailure("failed writing output file: " + path.string());
    }
}

} // namespace helixforge
