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

#include <string>
#include <string_view>
#include <vector>

#include "tactiplot/geometry.hpp"

namespace tactiplot {

enum class AxisScaleKind { Linear, Log10, Time };

// How Time values were entered; exports mirror it.
enum class TimePrecision { Date, DateTime };

std::string_view to_string(AxisScaleKind kind);
AxisScaleKind parse_scale_kind(std::string_view text);

struct CalibrationPoint {
  PixelPoint pixel;
  // Data units, or seconds since the Unix epoch for Time axes.
  double value = 0.0;

  friend bool operator==(const CalibrationPoint&, const CalibrationPoint&) = default;
};

struct AxisCalibration {
  CalibrationPoint p1;
  CalibrationPoint p2;
  AxisScaleKind kind = AxisScaleKind::Linear;
  Axis reads = Axis::X;
  TimePrecision time_precision = TimePrecision::DateTime;

  // The pixel component this axis is read from.
  double component(const PixelPoint& p) const { return reads == Axis::X ? p.x : p.y; }

  friend bool operator==(const AxisCalibration&, const AxisCalibration&) = default;
};

struct CalibrationSet {
  AxisCalibration x_axis;
  AxisCalibration y_axis;

  friend bool operator==(const CalibrationSet&, const CalibrationSet&) = default;
};

struct DataPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const DataPoint&, const DataPoint&) = default;
};

struct CalibrationViolation {
  Axis axis;
  std::string rule;
};

// Anchors near the lower-left corner of a typical chart, values 0 and 1.
CalibrationSet default_calibration(int image_width, int image_height);

std::vector<CalibrationViolation> validate_calibration(const CalibrationSet& set);

// Checks a calibration point against the image bounds grown by 10 % per side.
bool anchor_within_image(const PixelPoint& p, int image_width, int image_height);

DataPoint pixel_to_data(const CalibrationSet& set, const PixelPoint& p);
PixelPoint data_to_pixel(const CalibrationSet& set, const DataPoint& d);

// Single-axis forms. The returned pixel value is the axis component only.
double axis_pixel_to_value(const AxisCalibration& axis, double pixel_component);
double axis_value_to_pixel(const AxisCalibration& axis, double value);

// ISO-8601 dates ("2020-01-06") and date-times ("2020-01-06T12:00:00Z",
// optional fractional seconds and numeric offsets). Returns epoch seconds.
struct ParsedTime {
  double epoch_seconds = 0.0;
  TimePrecision precision = TimePrecision::Date;
};
ParsedTime parse_iso8601(std::string_view text);

// Date precision prints "YYYY-MM-DD" when the value sits on a UTC day
// boundary and falls back to a full date-time otherwise.
std::string format_iso8601(double epoch_seconds, TimePrecision precision);

// Parses a user-entered calibration value: plain decimal for Linear/Log10,
// ISO-8601 for Time. Scientific notation and locale formats are rejected.
double parse_axis_value(std::string_view text, AxisScaleKind kind,
                        TimePrecision* precision_out = nullptr);

}  // namespace tactiplot
