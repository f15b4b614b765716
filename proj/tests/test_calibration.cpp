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


#include <cmath>
#include <random>

#include "doctest.h"
#include "tactiplot/calibration.hpp"
#include "tactiplot/error.hpp"

using namespace tactiplot;

namespace {

AxisCalibration x_axis(double px1, double v1, double px2, double v2, AxisScaleKind kind) {
  AxisCalibration a;
  a.reads = Axis::X;
  a.kind = kind;
  a.p1 = {{px1, 500}, v1};
  a.p2 = {{px2, 500}, v2};
  return a;
}

AxisCalibration y_axis(double py1, double v1, double py2, double v2, AxisScaleKind kind) {
  AxisCalibration a;
  a.reads = Axis::Y;
  a.kind = kind;
  a.p1 = {{100, py1}, v1};
  a.p2 = {{100, py2}, v2};
  return a;
}

CalibrationSet with_x(AxisCalibration x) {
  return {x, y_axis(500, 0, 100, 1, AxisScaleKind::Linear)};
}

bool has_rule(const std::vector<CalibrationViolation>& report, const std::string& rule) {
  for (const auto& v : report) {
    if (v.rule == rule) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("default calibration places anchors at fixed fractions") {
  const auto set = default_calibration(1000, 800);
  CHECK(set.x_axis.p1.pixel.x == 150.0);
  CHECK(set.x_axis.p2.pixel.x == 900.0);
  CHECK(set.x_axis.p1.pixel.y == 720.0);
  CHECK(set.x_axis.p2.pixel.y == 720.0);
  CHECK(validate_calibration(set).empty());

  const auto tiny = default_calibration(10, 10);
  CHECK(validate_calibration(tiny).empty());
  CHECK(std::abs(tiny.x_axis.p2.pixel.x - tiny.x_axis.p1.pixel.x) >= 1.0);

  CHECK_THROWS_AS(default_calibration(0, 100), Error);
}

TEST_CASE("validation reports duplicate values and non-positive log anchors") {
  CHECK(has_rule(validate_calibration(with_x(x_axis(100, 5, 300, 5, AxisScaleKind::Linear))), "duplicate values"));
  CHECK(has_rule(validate_calibration(with_x(x_axis(100, -1, 300, 10, AxisScaleKind::Log10))),
                 "log requires positive"));
  CHECK(has_rule(validate_calibration(with_x(x_axis(100, 0, 100.5, 10, AxisScaleKind::Linear))),
                 "anchors closer than 1 pixel"));
}

TEST_CASE("pixel to data per scale kind") {
  CHECK(pixel_to_data(with_x(x_axis(100, 0, 300, 10, AxisScaleKind::Linear)), {200, 0}).x == 5.0);
  CHECK(pixel_to_data(with_x(x_axis(100, 1, 300, 100, AxisScaleKind::Log10)), {200, 0}).x ==
        doctest::Approx(10.0).epsilon(1e-12));

  const double t0 = parse_iso8601("2020-01-01T00:00Z").epoch_seconds;
  const double t1 = parse_iso8601("2020-01-11T00:00Z").epoch_seconds;
  const double mid = pixel_to_data(with_x(x_axis(0, t0, 100, t1, AxisScaleKind::Time)), {50, 0}).x;
  CHECK(format_iso8601(mid, TimePrecision::DateTime) == "2020-01-06T00:00:00Z");
}

TEST_CASE("y axis reads the vertical pixel component") {
  CalibrationSet set{x_axis(100, 0, 300, 10, AxisScaleKind::Linear), y_axis(400, 0, 200, 50, AxisScaleKind::Linear)};
  const auto d = pixel_to_data(set, {150, 300});
  CHECK(d.x == 2.5);
  CHECK(d.y == 25.0);
}

TEST_CASE("data to pixel inverts and rejects non-positive log values") {
  const auto linear = with_x(x_axis(100, 0, 300, 10, AxisScaleKind::Linear));
  CHECK(data_to_pixel(linear, {5.0, 0.0}).x == 200.0);
  const auto log = with_x(x_axis(100, 1, 300, 100, AxisScaleKind::Log10));
  CHECK(data_to_pixel(log, {1.0, 0.0}).x == 100.0);
  CHECK_THROWS_AS(data_to_pixel(log, {0.0, 0.0}), Error);
}

TEST_CASE("extrapolation outside the anchors is linear in the scale") {
  const auto set = with_x(x_axis(100, 0, 300, 10, AxisScaleKind::Linear));
  CHECK(pixel_to_data(set, {500, 0}).x == 20.0);
  CHECK(pixel_to_data(set, {0, 0}).x == -5.0);
}

TEST_CASE("round trip over random calibrations") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> px(0, 800), unit(0, 1);
  for (int i = 0; i < 2000; ++i) {
    const double a = px(rng);
    double b = px(rng);
    if (std::abs(b - a) < 20) b = a + 20;
    const double v1 = std::pow(10.0, unit(rng) * 6 - 3);
    const double v2 = v1 * std::pow(10.0, 0.5 + unit(rng) * 3);
    const auto set = with_x(x_axis(a, v1, b, v2, i % 2 ? AxisScaleKind::Log10 : AxisScaleKind::Linear));
    const PixelPoint p{px(rng), px(rng) * 0.75};
    const auto back = data_to_pixel(set, pixel_to_data(set, p));
    CHECK(std::abs(back.x - p.x) <= 1e-9 * std::max(1.0, std::abs(p.x)));
    CHECK(std::abs(back.y - p.y) <= 1e-9 * std::max(1.0, std::abs(p.y)));
  }
}

TEST_CASE("ISO-8601 parsing and formatting") {
  SUBCASE("date only") {
    const auto t = parse_iso8601("2020-01-06");
    CHECK(t.precision == TimePrecision::Date);
    CHECK(t.epoch_seconds == 1578268800.0);
    CHECK(format_iso8601(t.epoch_seconds, TimePrecision::Date) == "2020-01-06");
  }
  SUBCASE("offsets and fractions") {
    CHECK(parse_iso8601("2020-01-06T12:00:00Z").epoch_seconds == 1578312000.0);
    CHECK(parse_iso8601("2020-01-06T14:00:00+02:00").epoch_seconds == 1578312000.0);
    CHECK(parse_iso8601("2020-01-06T12:00:00.5Z").epoch_seconds == 1578312000.5);
    CHECK(parse_iso8601("2020-01-06T12:00:00.5Z").precision == TimePrecision::DateTime);
  }
  SUBCASE("date precision off a day boundary falls back to date-time") {
    CHECK(format_iso8601(1578312000.0, TimePrecision::Date) == "2020-01-06T12:00:00Z");
  }
  SUBCASE("before the epoch") {
    CHECK(parse_iso8601("1969-12-31").epoch_seconds == -86400.0);
    CHECK(format_iso8601(-86400.0, TimePrecision::Date) == "1969-12-31");
  }
  SUBCASE("malformed") {
    CHECK_THROWS_AS(parse_iso8601("2020-13-01"), Error);
    CHECK_THROWS_AS(parse_iso8601("2020-02-30"), Error);
    CHECK_THROWS_AS(parse_iso8601("yesterday"), Error);
  }
}

TEST_CASE("axis values from user text") {
  CHECK(parse_axis_value("12.5", AxisScaleKind::Linear) == 12.5);
  CHECK(parse_axis_value("-3", AxisScaleKind::Linear) == -3.0);
  CHECK_THROWS_AS(parse_axis_value("1e3", AxisScaleKind::Linear), Error);
  CHECK_THROWS_AS(parse_axis_value("1,5", AxisScaleKind::Linear), Error);
  TimePrecision precision = TimePrecision::DateTime;
  CHECK(parse_axis_value("2020-01-06", AxisScaleKind::Time, &precision) == 1578268800.0);
  CHECK(precision == TimePrecision::Date);
}

TEST_CASE("anchors may sit slightly outside the image") {
  CHECK(anchor_within_image({-5, 10}, 100, 100));
  CHECK(anchor_within_image({109, 109}, 100, 100));
  CHECK_FALSE(anchor_within_image({-11, 10}, 100, 100));
  CHECK_FALSE(anchor_within_image({50, 111}, 100, 100));
}
