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


#include "tactiplot/line_extraction.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "json.hpp"

#include "tactiplot/error.hpp"
#include "tactiplot/kernels.hpp"

namespace tactiplot {

MaskImage trace_color(const RasterImage& image, PixelPoint seed, double tolerance) {
  if (!(seed.x >= 0.0 && seed.y >= 0.0 && seed.x < image.width() && seed.y < image.height())) {
    throw Error(ErrorCode::InvalidInput, "trace seed lies outside the image");
  }
  if (!(tolerance >= 0.0 && tolerance <= kMaxColorTolerance)) {
    throw Error(ErrorCode::InvalidInput, "color tolerance must lie in [0, 441.68]");
  }
  const int sx = static_cast<int>(std::floor(seed.x));
  const int sy = static_cast<int>(std::floor(seed.y));
  const int w = image.width();
  const int h = image.height();
  const auto match = kernels::parallel::color_match(image, image.at(sx, sy), tolerance);

  MaskImage mask(w, h);
  std::deque<std::pair<int, int>> frontier;
  mask.set(sx, sy);
  frontier.emplace_back(sx, sy);
  while (!frontier.empty()) {
    const auto [x, y] = frontier.front();
    frontier.pop_front();
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        const int nx = x + dx;
        const int ny = y + dy;
        if ((dx == 0 && dy == 0) || !mask.contains(nx, ny) || mask.at(nx, ny)) continue;
        if (!match[static_cast<std::size_t>(ny) * w + nx]) continue;
        mask.set(nx, ny);
        frontier.emplace_back(nx, ny);
      }
    }
  }
  return mask;
}

MaskImage import_mask(std::span<const std::uint8_t> png_bytes, int expected_width,
                      int expected_height) {
  if (sniff_format(png_bytes) != ImageFormat::Png) {
    throw Error(ErrorCode::Format, "mask must be a PNG image");
  }
  const RasterImage raster = decode_image(png_bytes);
  if (raster.width() != expected_width || raster.height() != expected_height) {
    throw Error(ErrorCode::DimensionMismatch,
                "mask is " + std::to_string(raster.width()) + "x" +
                    std::to_string(raster.height()) + ", session image is " +
                    std::to_string(expected_width) + "x" + std::to_string(expected_height));
  }
  MaskImage mask(raster.width(), raster.height());
  for (int y = 0; y < raster.height(); ++y) {
    for (int x = 0; x < raster.width(); ++x) {
      const Rgba c = raster.at(x, y);
      if (c.r | c.g | c.b) mask.set(x, y);
    }
  }
  return mask;
}

PixelPolyline import_polyline(std::vector<PixelPoint> points) {
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::Format, "polyline coordinates must be finite");
    }
  }
  if (points.size() < 2) {
    throw Error(ErrorCode::Format, "polyline needs at least 2 distinct points");
  }
  return points;
}

PixelPolyline import_polyline(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Format, std::string("polyline JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::Format, "polyline JSON must be an array");
  std::vector<PixelPoint> points;
  for (const auto& item : doc) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
      throw Error(ErrorCode::Format, "polyline entries must be [x, y] number pairs");
    }
    points.push_back({item[0].get<double>(), item[1].get<double>()});
  }
  return import_polyline(std::move(points));
}

PixelPolyline mask_to_polyline(const MaskImage& mask) {
  const auto columns = kernels::parallel::column_sums(mask);
  PixelPolyline out;
  for (std::size_t x = 0; x < columns.size(); ++x) {
    if (columns[x].count == 0) continue;
    out.push_back({static_cast<double>(x) + 0.5, columns[x].sum_center_y / columns[x].count});
  }
  if (out.empty()) throw Error(ErrorCode::EmptyInput, "mask has no occupied pixels");
  return out;
}

double arc_length(std::span<const PixelPoint> polyline) {
  double total = 0.0;
  for (std::size_t i = 1; i < polyline.size(); ++i) total += distance(polyline[i - 1], polyline[i]);
  return total;
}

PixelPolyline sample_equidistant(std::span<const PixelPoint> polyline, int n) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "sample count must be at least 2");
  if (polyline.size() < 2) throw Error(ErrorCode::Degenerate, "polyline needs at least 2 points");
  std::vector<double> cumulative(polyline.size(), 0.0);
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    cumulative[i] = cumulative[i - 1] + distance(polyline[i - 1], polyline[i]);
  }
  const double total = cumulative.back();
  if (!(total > 0.0)) throw Error(ErrorCode::Degenerate, "polyline has zero length");

  PixelPolyline out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(polyline.front());
  std::size_t seg = 1;
  for (int k = 1; k < n - 1; ++k) {
    const double target = total * k / (n - 1);
    while (seg < polyline.size() - 1 && cumulative[seg] < target) ++seg;
    const double len = cumulative[seg] - cumulative[seg - 1];
    const double t = len > 0.0 ? (target - cumulative[seg - 1]) / len : 0.0;
    out.push_back(lerp(polyline[seg - 1], polyline[seg], std::clamp(t, 0.0, 1.0)));
  }
  out.push_back(polyline.back());
  return out;
}

int default_keypoint_count(std::span<const PixelPoint> polyline) {
  const long n = std::lround(arc_length(polyline) / 15.0);
  return static_cast<int>(std::clamp(n, 2L, 300L));
}

LineSeries resample_series(const LineSeries& series, int new_n, std::span<const PixelPoint> source) {
  LineSeries out = series;
  out.keypoints = sample_equidistant(source, new_n);
  out.keypoint_count_target = new_n;
  return out;
}

std::size_t insertion_index(const PixelPolyline& keypoints, const PixelPoint& point) {
  const auto it = std::upper_bound(keypoints.begin(), keypoints.end(), point.x,
                                   [](double x, const PixelPoint& p) { return x < p.x; });
  return static_cast<std::size_t>(it - keypoints.begin());
}

const std::string& edit_series_id(const EditAction& action) {
  return std::visit([](const auto& a) -> const std::string& { return a.series_id; }, action);
}

namespace {

[[noreturn]] void invalid_edit(const std::string& why) { throw Error(ErrorCode::InvalidEdit, why); }

void check_index(const LineSeries& series, std::size_t index) {
  if (index >= series.keypoints.size()) {
    invalid_edit("point index " + std::to_string(index) + " out of range for series '" +
                 series.id + "' with " + std::to_string(series.keypoints.size()) + " points");
  }
}

// A point placed at `index` (neighbours prev/next) must keep px_x ordered
// and differ from both neighbours.
void check_slot(const PixelPolyline& pts, std::size_t prev_end, std::size_t next_begin,
                const PixelPoint& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) invalid_edit("point must be finite");
  if (prev_end > 0) {
    const PixelPoint& prev = pts[prev_end - 1];
    if (prev.x > p.x) invalid_edit("edit would break ascending px_x order");
    if (prev == p) invalid_edit("edit would duplicate a neighbouring point");
  }
  if (next_begin < pts.size()) {
    const PixelPoint& next = pts[next_begin];
    if (next.x < p.x) invalid_edit("edit would break ascending px_x order");
    if (next == p) invalid_edit("edit would duplicate a neighbouring point");
  }
}

}  // namespace

EditAction resolve_edit(const LineSeries& series, const EditAction& action) {
  if (edit_series_id(action) != series.id) invalid_edit("edit targets a different series");
  return std::visit(
      [&](auto a) -> EditAction {
        using T = decltype(a);
        if constexpr (std::is_same_v<T, AddPoint>) {
          if (!a.index) a.index = insertion_index(series.keypoints, a.point);
        } else if constexpr (std::is_same_v<T, MovePoint>) {
          check_index(series, a.index);
          a.from = series.keypoints[a.index];
        } else {
          check_index(series, a.index);
          a.point = series.keypoints[a.index];
        }
        return a;
      },
      action);
}

LineSeries apply_edit(const LineSeries& series, const EditAction& action) {
  if (edit_series_id(action) != series.id) invalid_edit("edit targets a different series");
  LineSeries out = series;
  auto& pts = out.keypoints;
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, AddPoint>) {
          const std::size_t at = a.index.value_or(insertion_index(pts, a.point));
          if (at > pts.size()) invalid_edit("insert position out of range");
          check_slot(pts, at, at, a.point);
          pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(at), a.point);
        } else if constexpr (std::is_same_v<T, MovePoint>) {
          check_index(series, a.index);
          if (pts[a.index] != a.from) invalid_edit("move does not match the current point");
          check_slot(pts, a.index, a.index + 1, a.to);
          pts[a.index] = a.to;
        } else {
          check_index(series, a.index);
          if (pts[a.index] != a.point) invalid_edit("delete does not match the current point");
          if (pts.size() == 1) invalid_edit("a series keeps at least one point");
          if (a.index > 0 && a.index + 1 < pts.size() && pts[a.index - 1] == pts[a.index + 1]) {
            invalid_edit("delete would leave duplicate neighbouring points");
          }
          pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(a.index));
        }
      },
      action);
  return out;
}

EditAction invert(const EditAction& action) {
  return std::visit(
      [](const auto& a) -> EditAction {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, AddPoint>) {
          if (!a.index) invalid_edit("cannot invert an unresolved add");
          return DeletePoint{a.series_id, *a.index, a.point};
        } else if constexpr (std::is_same_v<T, MovePoint>) {
          return MovePoint{a.series_id, a.index, a.to, a.from};
        } else {
          return AddPoint{a.series_id, a.point, a.index};
        }
      },
      action);
}

double frechet_distance(std::span<const PixelPoint> p, std::span<const PixelPoint> q) {
  if (p.empty() || q.empty()) throw Error(ErrorCode::EmptyInput, "Frechet distance of an empty polyline");
  return kernels::parallel::frechet(p, q);
}

std::vector<DataPoint> series_to_data(const LineSeries& series, const CalibrationSet& calibration) {
  std::vector<DataPoint> out;
  out.reserve(series.keypoints.size());
  for (const auto& p : series.keypoints) out.push_back(pixel_to_data(calibration, p));
  return out;
}

}  // namespace tactiplot
