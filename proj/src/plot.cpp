// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace quarch {

namespace {

constexpr double kWidth = 640.0, kHeight = 480.0;
constexpr double kLeft = 62.0, kRight = 18.0, kTop = 22.0, kBottom = 52.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Series {
  std::string key;      // "backend/experiment"
  std::string backend;
  std::vector<const ExperimentRecord*> points;
};

struct Marker {
  const char* fill;
  char shape;  // 'c'ircle, 's'quare, 't'riangle, 'd'iamond
};

Marker marker_for(const std::string& backend) {
  if (backend.rfind("ionq", 0) == 0) return {"#000000", 'c'};
  if (backend.rfind("ibm", 0) == 0) return {"#1f77b4", 's'};
  if (backend.rfind("rigetti", 0) == 0) return {"#d62728", 't'};
  return {"#7f7f7f", 'd'};
}

void emit_marker(std::string& svg, const Marker& m, double x, double y) {
  switch (m.shape) {
    case 'c':
      svg += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) +
             "\" r=\"4\" fill=\"" + m.fill + "\"/>\n";
      break;
    case 's':
      svg += "<rect x=\"" + num(x - 4) + "\" y=\"" + num(y - 4) +
             "\" width=\"8\" height=\"8\" fill=\"" + m.fill + "\"/>\n";
      break;
    case 't':
      svg += "<polygon points=\"" + num(x) + "," + num(y - 5) + " " +
             num(x - 5) + "," + num(y + 4) + " " + num(x + 5) + "," +
             num(y + 4) + "\" fill=\"" + m.fill + "\"/>\n";
      break;
    default:
      svg += "<polygon points=\"" + num(x) + "," + num(y - 5) + " " +
             num(x + 5) + "," + num(y) + " " + num(x) + "," + num(y + 5) +
             " " + num(x - 5) + "," + num(y) + "\" fill=\"" + m.fill +
             "\"/>\n";
      break;
  }
}

}  // namespace

std::string render_svg(const std::vector<ExperimentRecord>& records,
                       const std::optional<FitResult>& fit) {
  if (records.empty()) throw std::invalid_argument("no records to plot");
  for (const ExperimentRecord& r : records)
    if (r.shots < 1) throw std::invalid_argument("no shots");

  std::vector<Series> series;
  for (const ExperimentRecord& r : records) {
    const std::string key = r.backend + "/" + r.experiment;
    auto it = std::find_if(series.begin(), series.end(),
                           [&](const Series& s) { return s.key == key; });
    if (it == series.end()) {
      series.push_back({key, r.backend, {}});
      it = std::prev(series.end());
    }
    it->points.push_back(&r);
  }

  double x_min = static_cast<double>(records.front().parameter);
  double x_max = x_min;
  for (const ExperimentRecord& r : records) {
    x_min = std::min(x_min, static_cast<double>(r.parameter));
    x_max = std::max(x_max, static_cast<double>(r.parameter));
  }
  if (x_min == x_max) {
    x_min -= 1.0;
    x_max += 1.0;
  }
  const double y_min = 0.0, y_max = 1.05;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto sx = [&](double x) {
    return kLeft + (x - x_min) / (x_max - x_min) * plot_w;
  };
  const auto sy = [&](double y) {
    return kTop + (y_max - y) / (y_max - y_min) * plot_h;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"480\" viewBox=\"0 0 640 480\">\n";
  svg += "<rect width=\"640\" height=\"480\" fill=\"#ffffff\"/>\n";

  // Gridlines and y ticks.
  for (int i = 0; i <= 4; ++i) {
    const double y = 0.25 * i;
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(sy(y)) +
           "\" x2=\"" + num(kWidth - kRight) + "\" y2=\"" + num(sy(y)) +
           "\" stroke=\"#dddddd\"/>\n";
    svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(sy(y) + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"end\">" + num(y) + "</text>\n";
  }
  // X ticks at integer steps.
  const double span = x_max - x_min;
  double x_step = 1.0;
  while (span / x_step > 8.0) x_step *= 2.0;
  for (double x = std::ceil(x_min / x_step) * x_step; x <= x_max + 1e-9;
       x += x_step) {
    svg += "<line x1=\"" + num(sx(x)) + "\" y1=\"" + num(kHeight - kBottom) +
           "\" x2=\"" + num(sx(x)) + "\" y2=\"" +
           num(kHeight - kBottom + 5) + "\" stroke=\"#000000\"/>\n";
    char label[32];
    std::snprintf(label, sizeof label, "%g", x);
    svg += "<text x=\"" + num(sx(x)) + "\" y=\"" +
           num(kHeight - kBottom + 20) +
           "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\">" + label + "</text>\n";
  }
  // Axes.
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" +
         num(kLeft) + "\" y2=\"" + num(kHeight - kBottom) +
         "\" stroke=\"#000000\"/>\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kHeight - kBottom) +
         "\" x2=\"" + num(kWidth - kRight) + "\" y2=\"" +
         num(kHeight - kBottom) + "\" stroke=\"#000000\"/>\n";
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" +
         num(kHeight - 14) +
         "\" font-family=\"sans-serif\" font-size=\"13\" "
         "text-anchor=\"middle\">" + records.front().experiment +
         " parameter</text>\n";
  svg += "<text x=\"16\" y=\"" + num(kTop + plot_h / 2) +
         "\" font-family=\"sans-serif\" font-size=\"13\" "
         "text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num(kTop + plot_h / 2) + ")\">success probability</text>\n";

  // Fit overlay under the data points.
  if (fit) {
    svg += "<polyline fill=\"none\" stroke=\"#555555\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"6,4\" points=\"";
    for (int i = 0; i <= 200; ++i) {
      const double x = x_min + (x_max - x_min) * i / 200.0;
      const double y =
          (fit->model == FitModel::Gaussian)
              ? 0.5 + fit->p1 * std::exp(-(x / fit->p0) * (x / fit->p0))
              : fit->p0 + fit->p1 * x;
      const double yc = std::clamp(y, y_min, y_max);
      svg += num(sx(x)) + "," + num(sy(yc));
      if (i != 200) svg += " ";
    }
    svg += "\"/>\n";
  }

  for (const Series& s : series) {
    const Marker m = marker_for(s.backend);
    for (const ExperimentRecord* r : s.points) {
      const double x = sx(static_cast<double>(r->parameter));
      const double p = static_cast<double>(r->successes) /
                       static_cast<double>(r->shots);
      const double y = sy(p);
      const double y_lo = sy(std::max(y_min, p - r->ci95));
      const double y_hi = sy(std::min(y_max, p + r->ci95));
      svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(y_lo) + "\" x2=\"" +
             num(x) + "\" y2=\"" + num(y_hi) + "\" stroke=\"" + m.fill +
             "\"/>\n";
      svg += "<line x1=\"" + num(x - 3) + "\" y1=\"" + num(y_lo) +
             "\" x2=\"" + num(x + 3) + "\" y2=\"" + num(y_lo) +
             "\" stroke=\"" + m.fill + "\"/>\n";
      svg += "<line x1=\"" + num(x - 3) + "\" y1=\"" + num(y_hi) +
             "\" x2=\"" + num(x + 3) + "\" y2=\"" + num(y_hi) +
             "\" stroke=\"" + m.fill + "\"/>\n";
      emit_marker(svg, m, x, y);
    }
  }

  // Legend, top-right inside the plot area.
  double ly = kTop + 12.0;
  for (const Series& s : series) {
    const Marker m = marker_for(s.backend);
    emit_marker(svg, m, kWidth - kRight - 150.0, ly - 4.0);
    svg += "<text x=\"" + num(kWidth - kRight - 140.0) + "\" y=\"" +
           num(ly) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + s.key +
           "</text>\n";
    ly += 18.0;
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace quarch
