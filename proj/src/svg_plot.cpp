#include "cascal/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace cascal {

namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

void write_roc_svg(std::ostream& out, const std::vector<PlotSeries>& series,
                   const std::string& title) {
  // Log FAR axis: pick the decade floor of the smallest positive far shown,
  // never below 1e-6. Zero far values are clipped onto the left edge.
  double min_far = 1.0;
  for (const auto& s : series) {
    for (const auto& [far, frr] : s.far_frr) {
      if (far > 0.0) min_far = std::min(min_far, far);
    }
  }
  double log_lo = std::floor(std::log10(std::max(min_far, 1e-6)));
  if (log_lo > -1.0) log_lo = -1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto x_of = [&](double far) {
    const double lf = std::log10(std::max(far, std::pow(10.0, log_lo)));
    return kLeft + plot_w * (lf - log_lo) / (0.0 - log_lo);
  };
  auto y_of = [&](double frr) { return kTop + plot_h * (1.0 - frr); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << escape(title) << "</text>\n";

  // grid and ticks
  for (int d = static_cast<int>(log_lo); d <= 0; ++d) {
    const double x = x_of(std::pow(10.0, d));
    out << "<line x1=\"" << x << "\" y1=\"" << kTop << "\" x2=\"" << x << "\" y2=\""
        << kTop + plot_h << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << x << "\" y=\"" << kTop + plot_h + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">1e" << d
        << "</text>\n";
  }
  for (int i = 0; i <= 10; i += 2) {
    const double frr = i / 10.0;
    const double y = y_of(frr);
    out << "<line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\"" << kLeft + plot_w
        << "\" y2=\"" << y << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << frr
        << "</text>\n";
  }
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">FAR</text>\n";
  out << "<text x=\"18\" y=\"" << kTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
      << "transform=\"rotate(-90 18 " << kTop + plot_h / 2 << ")\">FRR</text>\n";

  std::size_t color = 0;
  double legend_y = kTop + 14;
  for (const auto& s : series) {
    const char* stroke = kColors[color % (sizeof(kColors) / sizeof(kColors[0]))];
    ++color;
    out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\"";
    if (s.dashed) out << " stroke-dasharray=\"5,4\"";
    out << " points=\"";
    for (const auto& [far, frr] : s.far_frr) {
      out << x_of(far) << ',' << y_of(frr) << ' ';
    }
    out << "\"/>\n";
    out << "<line x1=\"" << kLeft + plot_w - 150 << "\" y1=\"" << legend_y << "\" x2=\""
        << kLeft + plot_w - 128 << "\" y2=\"" << legend_y << "\" stroke=\"" << stroke
        << "\" stroke-width=\"1.5\"" << (s.dashed ? " stroke-dasharray=\"5,4\"" : "") << "/>\n";
    out << "<text x=\"" << kLeft + plot_w - 122 << "\" y=\"" << legend_y + 4
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(s.label) << "</text>\n";
    legend_y += 16;
  }
  out << "</svg>\n";
}

}  // namespace cascal
