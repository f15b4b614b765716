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


#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <optional>
#include <variant>
#include <vector>

#include "tactiplot/calibration.hpp"
#include "tactiplot/geometry.hpp"
#include "tactiplot/image.hpp"

namespace tactiplot {

using PixelPolyline = std::vector<PixelPoint>;

inline constexpr double kDefaultColorTolerance = 40.0;
inline constexpr double kMaxColorTolerance = 441.68;

struct LineSeries {
  std::string id;
  std::string name;
  PixelPolyline keypoints;
  // Index into the tactile style cycle; assigned by rendering.
  int style_index = 0;
  int keypoint_count_target = 2;

  friend bool operator==(const LineSeries&, const LineSeries&) = default;
};

struct AddPoint {
  std::string series_id;
  PixelPoint point;
  // Unset until resolved against a series; see resolve_edit.
  std::optional<std::size_t> index;
  friend bool operator==(const AddPoint&, const AddPoint&) = default;
};
struct MovePoint {
  std::string series_id;
  std::size_t index = 0;
  PixelPoint from;
  PixelPoint to;
  friend bool operator==(const MovePoint&, const MovePoint&) = default;
};
struct DeletePoint {
  std::string series_id;
  std::size_t index = 0;
  PixelPoint point;
  friend bool operator==(const DeletePoint&, const DeletePoint&) = default;
};

using EditAction = std::variant<AddPoint, MovePoint, DeletePoint>;

// 8-connected flood fill over pixels within `tolerance` (RGB Euclidean) of
// the seed pixel's color.
MaskImage trace_color(const RasterImage& image, PixelPoint seed,
                      double tolerance = kDefaultColorTolerance);

// PNG of any bit depth; nonzero luminance marks occupied pixels.
MaskImage import_mask(std::span<const std::uint8_t> png_bytes, int expected_width,
                      int expected_height);

// JSON document: a top-level array of [x, y] number pairs.
PixelPolyline import_polyline(std::string_view json_text);
PixelPolyline import_polyline(std::vector<PixelPoint> points);

// One point per occupied column: (column center, mean occupied center y).
PixelPolyline mask_to_polyline(const MaskImage& mask);

double arc_length(std::span<const PixelPoint> polyline);

// n points at arc-length positions k * L / (n - 1).
PixelPolyline sample_equidistant(std::span<const PixelPoint> polyline, int n);

// max(2, round(L / 15 px)) capped at 300.
int default_keypoint_count(std::span<const PixelPoint> polyline);

LineSeries resample_series(const LineSeries& series, int new_n, std::span<const PixelPoint> source);

// Where AddPoint lands: after every keypoint with px_x <= point.x.
std::size_t insertion_index(const PixelPolyline& keypoints, const PixelPoint& point);

// Fills the state an action needs to be inverted exactly: the landing
// index of an AddPoint, the current position for MovePoint/DeletePoint.
EditAction resolve_edit(const LineSeries& series, const EditAction& action);

// Points must stay ordered by px_x: moves and indexed adds that would break
// the order are rejected, as are stale from/point fields.
LineSeries apply_edit(const LineSeries& series, const EditAction& action);

// Add <-> Delete, Move swaps from/to. Requires a resolved action.
EditAction invert(const EditAction& action);

const std::string& edit_series_id(const EditAction& action);

double frechet_distance(std::span<const PixelPoint> p, std::span<const PixelPoint> q);

std::vector<DataPoint> series_to_data(const LineSeries& series, const CalibrationSet& calibration);

}  // namespace tactiplot
