// Copyright 2026 The Tactiplot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>

#include "tactiplot/description.hpp"
#include "tactiplot/numfmt.hpp"

namespace tactiplot::testing {

namespace {

double segment_distance(PixelPoint p, PixelPoint a, PixelPoint b) {
  const double vx = b.x - a.x, vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = len2 > 0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, {a.x + t * vx, a.y + t * vy});
}

}  // namespace

void fill_rect(RasterImage& image, int x0, int y0, int x1, int y1, Rgba color) {
  for (int y = std::max(0, y0); y < std::min(image.height(), y1); ++y) {
    for (int x = std::max(0, x0); x < std::min(image.width(), x1); ++x) image.set(x, y, color);
  }
}

void draw_polyline(RasterImage& image, const PixelPolyline& line, double width, Rgba color) {
  const double half = width / 2.0;
  const double lo_x = line.front().x, hi_x = line.back().x;
  for (std::size_t k = 1; k < line.size(); ++k) {
    const PixelPoint a = line[k - 1], b = line[k];
    const int x0 = static_cast<int>(std::floor(std::min(a.x, b.x) - half - 1));
    const int x1 = static_cast<int>(std::ceil(std::max(a.x, b.x) + half + 1));
    const int y0 = static_cast<int>(std::floor(std::min(a.y, b.y) - half - 1));
    const int y1 = static_cast<int>(std::ceil(std::max(a.y, b.y) + half + 1));
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        if (!image.contains(x, y)) continue;
        const PixelPoint c{x + 0.5, y + 0.5};
        if (c.x < lo_x || c.x > hi_x) continue;
        if (segment_distance(c, a, b) <= half) image.set(x, y, color);
      }
    }
  }
}

SyntheticChart random_chart(std::mt19937_64& rng, int width, int height) {
  SyntheticChart chart;
  chart.image = RasterImage(width, height);
  RasterImage& img = chart.image;
  const double left = 0.125 * width, right = 0.925 * width;
  const double top = 0.1 * height, bottom = 0.866 * height;

  // Grid, then axes.
  const Rgba grid{225, 225, 225, 255};
  for (int i = 1; i < 5; ++i) {
    const int gx = static_cast<int>(left + (right - left) * i / 5.0);
    const int gy = static_cast<int>(top + (bottom - top) * i / 5.0);
    fill_rect(img, gx, int(top), gx + 1, int(bottom), grid);
    fill_rect(img, int(left), gy, int(right), gy + 1, grid);
  }
  const Rgba ink{30, 30, 30, 255};
  fill_rect(img, int(left) - 2, int(top), int(left), int(bottom) + 2, ink);
  fill_rect(img, int(left) - 2, int(bottom), int(right), int(bottom) + 2, ink);

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  static const Rgba kColors[] = {{214, 39, 40, 255}, {31, 119, 180, 255}, {44, 160, 44, 255},
                                 {148, 103, 189, 255}, {255, 127, 14, 255}};
  chart.color = kColors[rng() % std::size(kColors)];
  chart.line_width = 3.0;

  const int knots = 4 + static_cast<int>(rng() % 9);
  const double x0 = left + 20, x1 = right - 20;
  double y = top + 40 + unit(rng) * (bottom - top - 80);
  for (int i = 0; i < knots; ++i) {
    const double x = x0 + (x1 - x0) * i / (knots - 1);
    // Bounded steps keep slopes moderate.
    if (i > 0) y = std::clamp(y + (unit(rng) - 0.5) * 120.0, top + 30, bottom - 30);
    chart.truth.push_back({x, y});
  }
  draw_polyline(img, chart.truth, chart.line_width, chart.color);

  const double xa = std::round((unit(rng) - 0.5) * 200.0);
  const double xb = xa + 1.0 + std::round(unit(rng) * 999.0);
  const double ya = std::round((unit(rng) - 0.5) * 100.0);
  const double yb = ya + 1.0 + std::round(unit(rng) * 499.0);
  chart.calibration.x_axis = {{{left, bottom}, xa}, {{right, bottom}, xb}, AxisScaleKind::Linear, Axis::X};
  chart.calibration.y_axis = {{{left, bottom}, ya}, {{left, top}, yb}, AxisScaleKind::Linear, Axis::Y};

  const PixelPoint mid = chart.truth[chart.truth.size() / 2];
  chart.seed = {std::floor(mid.x), std::floor(mid.y)};
  return chart;
}

double interpolate_y(const PixelPolyline& line, double x) {
  if (x <= line.front().x) return line.front().y;
  if (x >= line.back().x) return line.back().y;
  auto it = std::upper_bound(line.begin(), line.end(), x,
                             [](double v, const PixelPoint& p) { return v < p.x; });
  const PixelPoint b = *it, a = *(it - 1);
  const double t = (x - a.x) / (b.x - a.x);
  return a.y + t * (b.y - a.y);
}

std::vector<std::uint8_t> png_bytes(const RasterImage& image) { return encode_png(image); }

double brute_force_frechet(const PixelPolyline& p, const PixelPolyline& q) {
  double best = std::numeric_limits<double>::infinity();
  std::function<void(std::size_t, std::size_t, double)> walk = [&](std::size_t i, std::size_t j,
                                                                   double worst) {
    worst = std::max(worst, distance(p[i], q[j]));
    if (worst >= best) return;
    if (i + 1 == p.size() && j + 1 == q.size()) {
      best = worst;
      return;
    }
    if (i + 1 < p.size()) walk(i + 1, j, worst);
    if (j + 1 < q.size()) walk(i, j + 1, worst);
    if (i + 1 < p.size() && j + 1 < q.size()) walk(i + 1, j + 1, worst);
  };
  walk(0, 0, 0.0);
  return best;
}

PixelPolyline random_polyline(std::mt19937_64& rng, int min_points, int max_points, double extent) {
  std::uniform_real_distribution<double> coord(0.0, extent);
  const int n = min_points + static_cast<int>(rng() % static_cast<unsigned>(max_points - min_points + 1));
  PixelPolyline out;
  for (int i = 0; i < n; ++i) out.push_back({coord(rng), coord(rng)});
  return out;
}

namespace {

const char* kWords[] = {"Sales", "Revenue", "Temperature", "Rainfall", "Index", "Growth",
                        "Users", "Cost", "Output", "Share"};

std::string words(std::mt19937_64& rng, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += kWords[rng() % std::size(kWords)];
  }
  return out;
}

AxisCalibration random_axis(std::mt19937_64& rng, Axis which, AxisScaleKind kind) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  AxisCalibration a;
  a.kind = kind;
  a.reads = which;
  const PixelPoint origin{100, 500};
  const PixelPoint far = which == Axis::X ? PixelPoint{700, 500} : PixelPoint{100, 100};
  double lo = 0, hi = 1;
  switch (kind) {
    case AxisScaleKind::Linear:
      lo = std::round((unit(rng) - 0.5) * 2000.0) / 10.0;
      hi = lo + 1.0 + std::round(unit(rng) * 9990.0) / 10.0;
      break;
    case AxisScaleKind::Log10: {
      const int k = static_cast<int>(rng() % 5) - 2;
      lo = std::pow(10.0, k);
      hi = std::pow(10.0, k + 1 + static_cast<int>(rng() % 4));
      break;
    }
    case AxisScaleKind::Time: {
      const double day = 86400.0;
      lo = (10957.0 + std::floor(unit(rng) * 7000.0)) * day;  // 2000-01-01 onwards
      hi = lo + (30.0 + std::floor(unit(rng) * 3000.0)) * day;
      a.time_precision = TimePrecision::Date;
      break;
    }
  }
  a.p1 = {origin, lo};
  a.p2 = {far, hi};
  return a;
}

std::vector<std::string> axis_labels(const AxisCalibration& a) {
  std::vector<std::string> out;
  const double from = a.component(a.p1.pixel), to = a.component(a.p2.pixel);
  for (int i = 0; i < 5; ++i) {
    const double v = axis_pixel_to_value(a, from + (to - from) * i / 4.0);
    if (a.kind == AxisScaleKind::Time) {
      // Whole days so labels stay date-only.
      out.push_back(format_iso8601(std::round(v / 86400.0) * 86400.0, TimePrecision::Date));
    } else {
      out.push_back(format_significant(v, 6));
    }
  }
  return out;
}

}  // namespace

ChartSession random_session(std::mt19937_64& rng, const SessionShape& shape) {
  auto image = std::make_shared<const RasterImage>(800, 600);
  ChartSession s = make_session(image, nullptr, false);
  CalibrationSet cal{random_axis(rng, Axis::X, shape.x_kind), random_axis(rng, Axis::Y, shape.y_kind)};
  s.calibration = cal;

  std::uniform_real_distribution<double> xs(110.0, 690.0), ys(110.0, 490.0), unit(0.0, 1.0);
  for (int k = 0; k < shape.series; ++k) {
    SessionSeries series;
    series.line.id = "s" + std::to_string(k + 1);
    series.line.name = "Line " + std::to_string(k + 1);
    const int n = 2 + static_cast<int>(rng() % 39);
    std::vector<double> x;
    while (static_cast<int>(x.size()) < n) {
      x.push_back(std::round(xs(rng) * 100.0) / 100.0);
      std::sort(x.begin(), x.end());
      x.erase(std::unique(x.begin(), x.end()), x.end());
    }
    const int style = static_cast<int>(rng() % 3);
    double walk = ys(rng);
    for (int i = 0; i < n; ++i) {
      double y;
      if (style == 0) {
        y = ys(rng);
      } else {
        walk = std::clamp(walk + (unit(rng) - 0.5 + (style == 1 ? -0.2 : 0.2)) * 40.0, 110.0, 490.0);
        y = walk;
      }
      series.line.keypoints.push_back({x[i], std::round(y * 100.0) / 100.0});
    }
    series.line.keypoint_count_target = n;
    series.trace = series.line.keypoints;
    s.series.push_back(std::move(series));
  }
  if (shape.titles) {
    s.metadata.set_text(TextFieldKind::PlotTitle, shape.title.empty() ? words(rng, 2) : shape.title,
                        Provenance::Manual);
    s.metadata.set_text(TextFieldKind::XAxisTitle, words(rng, 1), Provenance::Manual);
    s.metadata.set_text(TextFieldKind::YAxisTitle, words(rng, 1), Provenance::Manual);
  }
  if (shape.labels) {
    s.metadata.set(TextFieldKind::XAxisLabels, axis_labels(cal.x_axis), Provenance::Manual);
    s.metadata.set(TextFieldKind::YAxisLabels, axis_labels(cal.y_axis), Provenance::Manual);
  }
  return s;
}

ChartSession sales_session() {
  auto image = std::make_shared<const RasterImage>(800, 600);
  ChartSession s = make_session(image, nullptr, false);
  CalibrationSet cal;
  cal.x_axis = {{{100, 500}, 2010}, {{700, 500}, 2020}, AxisScaleKind::Linear, Axis::X};
  cal.y_axis = {{{100, 500}, 0}, {{100, 100}, 50}, AxisScaleKind::Linear, Axis::Y};
  s.calibration = cal;
  SessionSeries series;
  series.line.id = "s1";
  series.line.name = "Line 1";
  const std::pair<double, double> data[] = {{2010, 5},  {2012, 12}, {2014, 20}, {2016, 28},
                                            {2018, 35}, {2019, 42}, {2020, 40}};
  for (const auto& [x, y] : data) series.line.keypoints.push_back(data_to_pixel(cal, {x, y}));
  series.line.keypoint_count_target = static_cast<int>(series.line.keypoints.size());
  series.trace = series.line.keypoints;
  s.series.push_back(series);
  s.metadata.set_text(TextFieldKind::PlotTitle, "Sales", Provenance::Manual);
  s.metadata.set_text(TextFieldKind::XAxisTitle, "Year", Provenance::Manual);
  s.metadata.set_text(TextFieldKind::YAxisTitle, "Units", Provenance::Manual);
  s.metadata.set(TextFieldKind::XAxisLabels, {"2010", "2012", "2014", "2016", "2018", "2020"},
                 Provenance::Manual);
  s.metadata.set(TextFieldKind::YAxisLabels, {"0", "10", "20", "30", "40", "50"}, Provenance::Manual);
  return s;
}

std::string temp_dir(const std::string& prefix) {
  std::random_device rd;
  const auto dir = std::filesystem::temp_directory_path() /
                   (prefix + "-" + std::to_string(rd()) + std::to_string(rd()));
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace tactiplot::testing
