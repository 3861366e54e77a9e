#pragma once

#include <helixforge/toolpath.hpp>

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace helixforge {

// Fixed-point axis-word rendering: the given number of decimal places,
// ties rounded half away from zero, never exponent notation, no "-0.000".
std::string format_axis_value(double value, int decimals);

// One NC block: either a literal line (headers, footers) or an axis move
// whose words render in X, Y, Z, F order.
class Block {
public:
    static Block literal(std::string line);
    static Block move(std::optional<double> x, std::optional<double> y,
                      std::optional<double> z, std::optional<double> f = {});

    bool is_literal() const { return is_literal_; }
    const std::string& text() const { return text_; }
    std::optional<double> x() const { return x_; }
    std::optional<double> y() const { return y_; }
    std::optional<double> z() const { return z_; }
    std::optional<double> f() const { return f_; }

    std::string render(int decimals) const;

private:
    Block() = default;

    bool is_literal_ = false;
    std::string text_;
    std::optional<double> x_, y_, z_, f_;
};

// Knobs for render_program. The defaults reproduce the stock program
// layout: "%" start marker, approach at Z20, retract at Z100, three
// decimal places per axis word.
struct RenderOptions {
    int decimals = 3;
    std::string start_marker = "%";
    double approach_z = 20.0;
    double retract_z = 100.0;
};

// A complete program: ordered blocks plus the decimal policy they render
// with. The first block is the program-start marker and the last is "M30".
struct GCodeProgram {
    std::vector<Block> blocks;
    int decimals = 3;

    // One block per line, newline-terminated. Same input, same bytes.
    std::string render_text(bool crlf = false) const;
};

// Builds the full program for a point sequence:
//
//   %
//   G54 G17 G40 G80 G90
//   S1000 M03
//   G01 Z100. F1000
//   X{cx} Y{cy} Z20.00 F3000
//   X.. Y.. Z..          (one block per point)
//   X{cx} Y{cy} F1000
//   Z100.000
//   M30
//
// Throws EmptyToolpath for an empty sequence.
GCodeProgram render_program(std::span<const ToolpathPoint> points, const HelixSpec& spec,
                            const RenderOptions& options = {});

// Writes the program to path, newline-terminated ("\r\n" with crlf).
// Byte-identical output for identical inputs. Throws IoFailure on
// filesystem errors.
void write_program(const GCodeProgram& program, const std::filesystem::path& path,
                   bool crlf = false);

} // namespace helixforge
