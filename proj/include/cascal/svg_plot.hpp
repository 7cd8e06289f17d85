#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cascal {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> far_frr;  // x = far, y = frr
  bool dashed = false;
};

// ROC plot with a log-scaled FAR axis and a linear FRR axis. Presentation
// only; the numeric CSV files remain the source of truth.
void write_roc_svg(std::ostream& out, const std::vector<PlotSeries>& series,
                   const std::string& title);

}  // namespace cascal
