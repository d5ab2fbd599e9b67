#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "qnr/regress/band.hpp"

namespace qnr::io {

// Static single-file band plot: shaded band polygon, center polyline, and the
// observations as dots.  The abscissa is one predictor coordinate per band
// row; callers supply the same coordinate for the data points.
inline std::string render_band_svg(const std::vector<double>& grid_x,
                                   const regress::ConfidenceBand& band,
                                   const std::vector<double>& data_x,
                                   const std::vector<double>& data_y,
                                   const std::string& title = "") {
  constexpr double kW = 720, kH = 480, kMargin = 56;
  const std::size_t m = grid_x.size();

  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  auto extend = [&](double x, double y) {
    if (first) {
      xmin = xmax = x;
      ymin = ymax = y;
      first = false;
      return;
    }
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (std::size_t i = 0; i < m; ++i) {
    extend(grid_x[i], band.lower[i]);
    extend(grid_x[i], band.upper[i]);
  }
  for (std::size_t i = 0; i < data_x.size(); ++i) extend(data_x[i], data_y[i]);
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  const double xpad = 0.04 * (xmax - xmin), ypad = 0.08 * (ymax - ymin);
  xmin -= xpad;
  xmax += xpad;
  ymin -= ypad;
  ymax += ypad;

  auto px = [&](double x) { return kMargin + (x - xmin) / (xmax - xmin) * (kW - 2 * kMargin); };
  auto py = [&](double y) { return kH - kMargin - (y - ymin) / (ymax - ymin) * (kH - 2 * kMargin); };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return std::string(buf);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" "
         "viewBox=\"0 0 720 480\">\n";
  svg += "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
  if (!title.empty())
    svg += "<text x=\"360\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">" + title + "</text>\n";

  if (m > 0) {
    std::string pts;
    for (std::size_t i = 0; i < m; ++i)
      pts += num(px(grid_x[i])) + "," + num(py(band.upper[i])) + " ";
    for (std::size_t i = m; i-- > 0;)
      pts += num(px(grid_x[i])) + "," + num(py(band.lower[i])) + " ";
    svg += "<polygon points=\"" + pts + "\" fill=\"#9ecae1\" fill-opacity=\"0.5\" "
           "stroke=\"none\"/>\n";

    std::string line;
    for (std::size_t i = 0; i < m; ++i)
      line += num(px(grid_x[i])) + "," + num(py(band.center[i])) + " ";
    svg += "<polyline points=\"" + line + "\" fill=\"none\" stroke=\"#08519c\" "
           "stroke-width=\"2\"/>\n";
  }

  for (std::size_t i = 0; i < data_x.size(); ++i)
    svg += "<circle cx=\"" + num(px(data_x[i])) + "\" cy=\"" + num(py(data_y[i])) +
           "\" r=\"3\" fill=\"#e6550d\"/>\n";

  // axes with end labels
  svg += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(kH - kMargin) + "\" x2=\"" +
         num(kW - kMargin) + "\" y2=\"" + num(kH - kMargin) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(kMargin) + "\" x2=\"" + num(kMargin) +
         "\" y2=\"" + num(kH - kMargin) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<text x=\"" + num(kMargin) + "\" y=\"" + num(kH - kMargin + 18) +
         "\" font-family=\"sans-serif\" font-size=\"11\">" + num(xmin) + "</text>\n";
  svg += "<text x=\"" + num(kW - kMargin) + "\" y=\"" + num(kH - kMargin + 18) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + num(xmax) +
         "</text>\n";
  svg += "<text x=\"" + num(kMargin - 6) + "\" y=\"" + num(kH - kMargin) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + num(ymin) +
         "</text>\n";
  svg += "<text x=\"" + num(kMargin - 6) + "\" y=\"" + num(kMargin + 4) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + num(ymax) +
         "</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace qnr::io
