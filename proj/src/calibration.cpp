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


#include "tactiplot/calibration.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <regex>

#include "tactiplot/error.hpp"

namespace tactiplot {

std::string_view to_string(AxisScaleKind kind) {
  switch (kind) {
    case AxisScaleKind::Linear: return "linear";
    case AxisScaleKind::Log10: return "log10";
    case AxisScaleKind::Time: return "time";
  }
  return "linear";
}

AxisScaleKind parse_scale_kind(std::string_view text) {
  if (text == "linear") return AxisScaleKind::Linear;
  if (text == "log10" || text == "log") return AxisScaleKind::Log10;
  if (text == "time") return AxisScaleKind::Time;
  throw Error(ErrorCode::InvalidInput, "unknown scale kind '" + std::string(text) + "'");
}

CalibrationSet default_calibration(int image_width, int image_height) {
  if (image_width < 10 || image_height < 10) {
    throw Error(ErrorCode::InvalidInput, "image must be at least 10x10 pixels");
  }
  const double w = image_width;
  const double h = image_height;
  CalibrationSet set;
  set.x_axis.reads = Axis::X;
  set.x_axis.p1 = {{0.15 * w, 0.90 * h}, 0.0};
  set.x_axis.p2 = {{0.90 * w, 0.90 * h}, 1.0};
  set.y_axis.reads = Axis::Y;
  set.y_axis.p1 = {{0.10 * w, 0.85 * h}, 0.0};
  set.y_axis.p2 = {{0.10 * w, 0.10 * h}, 1.0};
  return set;
}

namespace {

void check_axis(const AxisCalibration& axis, Axis expected,
                std::vector<CalibrationViolation>& out) {
  const Axis name = expected;
  if (axis.reads != expected) {
    out.push_back({name, "axis reads the wrong pixel component"});
  }
  const double c1 = axis.component(axis.p1.pixel);
  const double c2 = axis.component(axis.p2.pixel);
  if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(axis.p1.value) ||
      !std::isfinite(axis.p2.value)) {
    out.push_back({name, "non-finite anchor"});
    return;
  }
  if (std::abs(c2 - c1) < 1.0) out.push_back({name, "anchors closer than 1 pixel"});
  if (axis.p1.value == axis.p2.value) out.push_back({name, "duplicate values"});
  if (axis.kind == AxisScaleKind::Log10 && (axis.p1.value <= 0.0 || axis.p2.value <= 0.0)) {
    out.push_back({name, "log requires positive"});
  }
}

void require_valid(const CalibrationSet& set) {
  const auto report = validate_calibration(set);
  if (!report.empty()) {
    throw Error(ErrorCode::InvalidCalibration,
                std::string(report.front().axis == Axis::X ? "x" : "y") +
                    "-axis calibration: " + report.front().rule);
  }
}

}  // namespace

std::vector<CalibrationViolation> validate_calibration(const CalibrationSet& set) {
  std::vector<CalibrationViolation> out;
  check_axis(set.x_axis, Axis::X, out);
  check_axis(set.y_axis, Axis::Y, out);
  return out;
}

bool anchor_within_image(const PixelPoint& p, int image_width, int image_height) {
  const double mx = 0.1 * image_width;
  const double my = 0.1 * image_height;
  return p.x >= -mx && p.x <= image_width + mx && p.y >= -my && p.y <= image_height + my;
}

double axis_pixel_to_value(const AxisCalibration& axis, double c) {
  const double c1 = axis.component(axis.p1.pixel);
  const double c2 = axis.component(axis.p2.pixel);
  const double t = (c - c1) / (c2 - c1);
  const double v1 = axis.p1.value;
  const double v2 = axis.p2.value;
  if (t == 0.0) return v1;
  if (t == 1.0) return v2;
  if (axis.kind == AxisScaleKind::Log10) {
    const double l1 = std::log10(v1);
    const double l2 = std::log10(v2);
    return std::pow(10.0, (1.0 - t) * l1 + t * l2);
  }
  return (1.0 - t) * v1 + t * v2;
}

double axis_value_to_pixel(const AxisCalibration& axis, double v) {
  const double c1 = axis.component(axis.p1.pixel);
  const double c2 = axis.component(axis.p2.pixel);
  const double v1 = axis.p1.value;
  const double v2 = axis.p2.value;
  double t = 0.0;
  if (axis.kind == AxisScaleKind::Log10) {
    if (!(v > 0.0)) {
      throw Error(ErrorCode::Domain, "log10 axis requires a positive value");
    }
    const double l1 = std::log10(v1);
    t = (std::log10(v) - l1) / (std::log10(v2) - l1);
  } else {
    t = (v - v1) / (v2 - v1);
  }
  if (t == 0.0) return c1;
  if (t == 1.0) return c2;
  return (1.0 - t) * c1 + t * c2;
}

DataPoint pixel_to_data(const CalibrationSet& set, const PixelPoint& p) {
  require_valid(set);
  return {axis_pixel_to_value(set.x_axis, p.x), axis_pixel_to_value(set.y_axis, p.y)};
}

PixelPoint data_to_pixel(const CalibrationSet& set, const DataPoint& d) {
  require_valid(set);
  return {axis_value_to_pixel(set.x_axis, d.x), axis_value_to_pixel(set.y_axis, d.y)};
}

// ---------------------------------------------------------------------------
// Time values

ParsedTime parse_iso8601(std::string_view text) {
  static const std::regex re(
      R"(^(\d{4})-(\d{2})-(\d{2})(?:[T ](\d{2}):(\d{2})(?::(\d{2})(\.\d+)?)?(Z|[+-]\d{2}:?\d{2})?)?$)");
  std::cmatch m;
  if (!std::regex_match(text.begin(), text.end(), m, re)) {
    throw Error(ErrorCode::InvalidInput, "not an ISO-8601 date: '" + std::string(text) + "'");
  }
  using namespace std::chrono;
  const int yy = std::stoi(m[1].str());
  const unsigned mo = static_cast<unsigned>(std::stoi(m[2].str()));
  const unsigned dd = static_cast<unsigned>(std::stoi(m[3].str()));
  const year_month_day ymd{year{yy}, month{mo}, day{dd}};
  if (!ymd.ok()) {
    throw Error(ErrorCode::InvalidInput, "invalid calendar date: '" + std::string(text) + "'");
  }
  ParsedTime out;
  out.epoch_seconds =
      static_cast<double>(sys_days{ymd}.time_since_epoch().count()) * 86400.0;
  if (!m[4].matched) return out;

  out.precision = TimePrecision::DateTime;
  const int hh = std::stoi(m[4].str());
  const int mi = std::stoi(m[5].str());
  const int ss = m[6].matched ? std::stoi(m[6].str()) : 0;
  if (hh > 23 || mi > 59 || ss > 60) {
    throw Error(ErrorCode::InvalidInput, "invalid time of day: '" + std::string(text) + "'");
  }
  double frac = 0.0;
  if (m[7].matched) frac = std::stod("0" + m[7].str());
  double offset = 0.0;
  if (m[8].matched && m[8].str() != "Z") {
    std::string tz = m[8].str();
    const int sign = tz[0] == '-' ? -1 : 1;
    tz.erase(std::remove(tz.begin(), tz.end(), ':'), tz.end());
    const int oh = std::stoi(tz.substr(1, 2));
    const int om = std::stoi(tz.substr(3, 2));
    offset = sign * (oh * 3600.0 + om * 60.0);
  }
  out.epoch_seconds += hh * 3600.0 + mi * 60.0 + ss + frac - offset;
  return out;
}

std::string format_iso8601(double epoch_seconds, TimePrecision precision) {
  using namespace std::chrono;
  // Millisecond resolution keeps ten significant digits of epoch seconds.
  const auto total_ms = static_cast<long long>(std::llround(epoch_seconds * 1000.0));
  long long days = total_ms / 86'400'000;
  long long ms_of_day = total_ms % 86'400'000;
  if (ms_of_day < 0) {
    ms_of_day += 86'400'000;
    days -= 1;
  }
  const year_month_day ymd{sys_days{std::chrono::days{days}}};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  std::string out = buf;
  if (precision == TimePrecision::Date && ms_of_day == 0) return out;

  const long long hh = ms_of_day / 3'600'000;
  const long long mi = (ms_of_day / 60'000) % 60;
  const long long ss = (ms_of_day / 1000) % 60;
  const long long ms = ms_of_day % 1000;
  if (ms != 0) {
    std::snprintf(buf, sizeof buf, "T%02lld:%02lld:%02lld.%03lldZ", hh, mi, ss, ms);
  } else {
    std::snprintf(buf, sizeof buf, "T%02lld:%02lld:%02lldZ", hh, mi, ss);
  }
  return out + buf;
}

double parse_axis_value(std::string_view text, AxisScaleKind kind, TimePrecision* precision_out) {
  if (kind == AxisScaleKind::Time) {
    const ParsedTime t = parse_iso8601(text);
    if (precision_out) *precision_out = t.precision;
    return t.epoch_seconds;
  }
  static const std::regex plain(R"(^[+-]?(\d+\.?\d*|\.\d+)$)");
  if (!std::regex_match(text.begin(), text.end(), plain)) {
    throw Error(ErrorCode::InvalidInput, "not a plain decimal number: '" + std::string(text) + "'");
  }
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (res.ec != std::errc{}) {
    throw Error(ErrorCode::InvalidInput, "number out of range: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace tactiplot
