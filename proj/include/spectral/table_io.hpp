#pragma once

#include <string>
#include <vector>

namespace spectral::io {

/// %.17g rendering (round-trip safe for doubles).
std::string format_double(double value);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

/// Comma separation, '.' decimal point, header line first.
/// Throws std::ios_base::failure on write errors.
void write_csv(const std::string& path, const Table& table);

/// Single-polyline plot with axes and tick labels; no external plotting
/// dependency. Throws std::ios_base::failure on write errors.
void write_svg_line_plot(const std::string& path, const std::vector<double>& xs,
                         const std::vector<double>& ys, const std::string& x_label,
                         const std::string& y_label);

}  // namespace spectral::io
