//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_SVG_HPP_
#define SMH_SVG_HPP_

#include <string>
#include <vector>

namespace smh::svg {

struct Series {
  std::string name;
  std::string color;  // e.g. "#1f77b4"
  std::vector<double> x;
  std::vector<double> y;
};

/// Minimal multi-series line plot with axes and a legend.
std::string line_plot(const std::vector<Series>& series,
                      const std::string& title, int width = 720,
                      int height = 420);

/// Grouped bar chart: one group per label, one bar per series.
std::string bar_chart(const std::vector<std::string>& labels,
                      const std::vector<Series>& series,
                      const std::string& title, int width = 720,
                      int height = 420);

}  // namespace smh::svg

#endif  // SMH_SVG_HPP_
