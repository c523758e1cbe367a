//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "smh/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace smh::svg {

namespace {

constexpr int kMarginLeft = 64;
constexpr int kMarginRight = 16;
constexpr int kMarginTop = 36;
constexpr int kMarginBottom = 44;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (lo == hi) {
      lo -= 1.0;
      hi += 1.0;
    }
  }
};

void header(std::ostringstream& os, int width, int height,
            const std::string& title) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"14\">"
     << title << "</text>\n";
}

void axes(std::ostringstream& os, int width, int height, const Range& xr,
          const Range& yr) {
  const int x0 = kMarginLeft, x1 = width - kMarginRight;
  const int y0 = height - kMarginBottom, y1 = kMarginTop;
  os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1
     << "\" y2=\"" << y0 << "\" stroke=\"black\"/>\n"
     << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0
     << "\" y2=\"" << y1 << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double fx = xr.lo + (xr.hi - xr.lo) * t / 4.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * t / 4.0;
    const double px = x0 + (x1 - x0) * t / 4.0;
    const double py = y0 - (y0 - y1) * t / 4.0;
    os << "<text x=\"" << px << "\" y=\"" << y0 + 16
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"10\">"
       << fmt(fx) << "</text>\n"
       << "<text x=\"" << x0 - 6 << "\" y=\"" << py + 3
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
       << fmt(fy) << "</text>\n";
  }
}

}  // namespace

std::string line_plot(const std::vector<Series>& series,
                      const std::string& title, int width, int height) {
  Range xr, yr;
  for (const auto& s : series) {
    for (const double v : s.x) xr.add(v);
    for (const double v : s.y) yr.add(v);
  }
  xr.pad();
  yr.pad();

  std::ostringstream os;
  header(os, width, height, title);
  axes(os, width, height, xr, yr);

  const int x0 = kMarginLeft, x1 = width - kMarginRight;
  const int y0 = height - kMarginBottom, y1 = kMarginTop;
  int legend_y = y1 + 6;
  for (const auto& s : series) {
    os << "<polyline fill=\"none\" stroke=\"" << s.color
       << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double px = x0 + (x1 - x0) * (s.x[i] - xr.lo) / (xr.hi - xr.lo);
      const double py = y0 - (y0 - y1) * (s.y[i] - yr.lo) / (yr.hi - yr.lo);
      os << fmt(px) << ',' << fmt(py) << ' ';
    }
    os << "\"/>\n";
    os << "<text x=\"" << x1 - 4 << "\" y=\"" << legend_y
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
          "fill=\""
       << s.color << "\">" << s.name << "</text>\n";
    legend_y += 14;
  }
  os << "</svg>\n";
  return os.str();
}

std::string bar_chart(const std::vector<std::string>& labels,
                      const std::vector<Series>& series,
                      const std::string& title, int width, int height) {
  Range yr;
  yr.add(0.0);
  for (const auto& s : series) {
    for (const double v : s.y) yr.add(v);
  }
  yr.pad();

  std::ostringstream os;
  header(os, width, height, title);
  Range xr;
  xr.add(0.0);
  xr.add(static_cast<double>(labels.size()));
  axes(os, width, height, xr, yr);

  const int x0 = kMarginLeft, x1 = width - kMarginRight;
  const int y0 = height - kMarginBottom, y1 = kMarginTop;
  const double group_w =
      static_cast<double>(x1 - x0) / static_cast<double>(labels.size());
  const double bar_w = group_w * 0.8 / static_cast<double>(series.size());

  auto ypix = [&](double v) {
    return y0 - (y0 - y1) * (v - yr.lo) / (yr.hi - yr.lo);
  };
  for (std::size_t g = 0; g < labels.size(); ++g) {
    for (std::size_t s = 0; s < series.size(); ++s) {
      if (g >= series[s].y.size()) continue;
      const double v = series[s].y[g];
      const double px =
          x0 + group_w * static_cast<double>(g) + group_w * 0.1 + bar_w * s;
      const double top = ypix(std::max(v, 0.0));
      const double bottom = ypix(std::min(v, 0.0));
      os << "<rect x=\"" << fmt(px) << "\" y=\"" << fmt(top) << "\" width=\""
         << fmt(bar_w) << "\" height=\"" << fmt(std::max(bottom - top, 0.5))
         << "\" fill=\"" << series[s].color << "\"/>\n";
    }
    os << "<text x=\"" << fmt(x0 + group_w * (g + 0.5)) << "\" y=\""
       << y0 + 30 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"9\">"
       << labels[g] << "</text>\n";
  }
  int legend_y = y1 + 6;
  for (const auto& s : series) {
    os << "<text x=\"" << x1 - 4 << "\" y=\"" << legend_y
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
          "fill=\""
       << s.color << "\">" << s.name << "</text>\n";
    legend_y += 14;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace smh::svg
