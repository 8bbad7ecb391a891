#include "spectral/table_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ios>
#include <stdexcept>

namespace spectral::io {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != header.size()) {
    throw std::invalid_argument("Table: row width does not match header");
  }
  rows.push_back(std::move(row));
}

namespace {

std::string join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ',';
    line += cells[i];
  }
  return line;
}

}  // namespace

void write_csv(const std::string& path, const Table& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  out << join(table.header) << '\n';
  for (const auto& row : table.rows) out << join(row) << '\n';
  out.flush();
  if (!out) throw std::ios_base::failure("write failed for " + path);
}

void write_svg_line_plot(const std::string& path, const std::vector<double>& xs,
                         const std::vector<double>& ys, const std::string& x_label,
                         const std::string& y_label) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw std::invalid_argument("write_svg_line_plot: need matching nonempty series");
  }
  const double width = 800.0, height = 500.0;
  const double left = 70.0, right = 20.0, top = 20.0, bottom = 50.0;
  double xmin = xs[0], xmax = xs[0], ymin = ys[0], ymax = ys[0];
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xmin = std::min(xmin, xs[i]);
    xmax = std::max(xmax, xs[i]);
    ymin = std::min(ymin, ys[i]);
    ymax = std::max(ymax, ys[i]);
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;
  const auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * plot_w; };
  const auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * plot_h; };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  char buf[256];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
         "viewBox=\"0 0 800 500\">\n";
  out << "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  // axes
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n", left,
                top + plot_h, left + plot_w, top + plot_h);
  out << buf;
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n", left,
                top, left, top + plot_h);
  out << buf;
  // ticks
  for (int i = 0; i <= 4; ++i) {
    const double xv = xmin + (xmax - xmin) * i / 4.0;
    const double yv = ymin + (ymax - ymin) * i / 4.0;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" text-anchor=\"middle\">%g</text>\n",
                  px(xv), top + plot_h + 18.0, xv);
    out << buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" text-anchor=\"end\">%g</text>\n",
                  left - 6.0, py(yv) + 4.0, yv);
    out << buf;
  }
  // axis labels
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%.1f\" y=\"%.1f\" font-size=\"14\" text-anchor=\"middle\">%s</text>\n",
                left + plot_w / 2.0, height - 10.0, x_label.c_str());
  out << buf;
  std::snprintf(buf, sizeof(buf),
                "<text x=\"16\" y=\"%.1f\" font-size=\"14\" text-anchor=\"middle\" "
                "transform=\"rotate(-90 16 %.1f)\">%s</text>\n",
                top + plot_h / 2.0, top + plot_h / 2.0, y_label.c_str());
  out << buf;
  // data
  out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(xs[i]), py(ys[i]));
    out << buf;
  }
  out << "\"/>\n</svg>\n";
  out.flush();
  if (!out) throw std::ios_base::failure("write failed for " + path);
}

}  // namespace spectral::io
