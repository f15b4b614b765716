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


#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tactiplot/csv.hpp"
#include "tactiplot/error.hpp"
#include "tactiplot/numfmt.hpp"
#include "tactiplot/rendering.hpp"

using namespace tactiplot;

namespace {

ChartSession two_point_session() {
  auto s = make_session(std::make_shared<const RasterImage>(800, 600), nullptr, false);
  CalibrationSet cal;
  cal.x_axis = {{{100, 500}, 0}, {{200, 500}, 1}, AxisScaleKind::Linear, Axis::X};
  cal.y_axis = {{{100, 500}, 0}, {{100, 400}, 1}, AxisScaleKind::Linear, Axis::Y};
  s.calibration = cal;
  SessionSeries series;
  series.line.id = "s1";
  series.line.name = "Line 1";
  series.line.keypoints = {{100, 350}, {200, 300}};
  s.series.push_back(series);
  return s;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t at = 0;
  while (at < text.size()) {
    const auto nl = text.find('\n', at);
    out.push_back(text.substr(at, nl - at));
    at = nl + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("field quoting") {
  CHECK(csv::quote_field("plain") == "plain");
  CHECK(csv::quote_field("a,b") == "\"a,b\"");
  CHECK(csv::quote_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv::quote_field("two\nlines") == "\"two\nlines\"");
  CHECK(csv::quote_field("") == "");
}

TEST_CASE("reader handles quotes, CRLF and empty fields") {
  const auto rows = csv::parse("a,\"b,c\",\"d\"\"e\"\r\n,,\n\"multi\nline\",x\n");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"a", "b,c", "d\"e"});
  CHECK(rows[1] == std::vector<std::string>{"", "", ""});
  CHECK(rows[2] == std::vector<std::string>{"multi\nline", "x"});
  CHECK_THROWS_AS(csv::parse("\"open"), Error);
}

TEST_CASE("export layout") {
  auto s = two_point_session();
  s.metadata.set_text(TextFieldKind::PlotTitle, "Sales, by year", Provenance::Manual);
  s.metadata.set_text(TextFieldKind::ChartDescription, "Two points.", Provenance::Manual);
  const auto out = lines(export_csv(s));
  REQUIRE(out.size() == 7);
  CHECK(out[0] == "# title: \"Sales, by year\"");
  CHECK(out[1] == "# x_axis: ");
  CHECK(out[3] == "# description: Two points.");
  CHECK(out[4] == "series,x,y");
  CHECK(out[5] == "Line 1,0,1.5");
  CHECK(out[6] == "Line 1,1,2");
}

TEST_CASE("rows are sorted by x and Time values print as ISO") {
  auto s = two_point_session();
  auto& x = s.calibration->x_axis;
  x.kind = AxisScaleKind::Time;
  x.time_precision = TimePrecision::Date;
  x.p1.value = parse_iso8601("2021-03-01").epoch_seconds;
  x.p2.value = parse_iso8601("2021-03-02").epoch_seconds;
  s.series[0].line.keypoints = {{200, 300}, {100, 350}};
  const auto out = lines(export_csv(s));
  CHECK(out[5] == "Line 1,2021-03-01,1.5");
  CHECK(out[6] == "Line 1,2021-03-02,2");
}

TEST_CASE("export refuses sessions without series or calibration") {
  auto s = two_point_session();
  s.series.clear();
  CHECK_THROWS_AS(export_csv(s), Error);
  auto t = two_point_session();
  t.calibration.reset();
  CHECK_THROWS_AS(export_csv(t), Error);
}

TEST_CASE("parse-back reproduces values at 10 significant digits") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    testing::SessionShape shape;
    shape.series = 1 + static_cast<int>(rng() % 3);
    shape.x_kind = i % 3 == 0 ? AxisScaleKind::Time : AxisScaleKind::Linear;
    shape.y_kind = i % 4 == 0 ? AxisScaleKind::Log10 : AxisScaleKind::Linear;
    shape.title = "Quote \" comma , newline\n end";
    auto s = testing::random_session(rng, shape);
    const auto doc = parse_export_csv(export_csv(s));
    CHECK(doc.metadata.at("title") == shape.title);
    std::size_t row = 0;
    for (const auto& series : s.series) {
      auto data = series_to_data(series.line, *s.calibration);
      std::stable_sort(data.begin(), data.end(), [](auto& a, auto& b) { return a.x < b.x; });
      for (const auto& d : data) {
        REQUIRE(row < doc.rows.size());
        CHECK(doc.rows[row].series == series.line.name);
        const double y = parse_csv_value(doc.rows[row].y);
        CHECK(format_significant(y, 10) == format_significant(d.y, 10));
        if (shape.x_kind != AxisScaleKind::Time) {
          CHECK(format_significant(parse_csv_value(doc.rows[row].x), 10) == format_significant(d.x, 10));
        }
        ++row;
      }
    }
    CHECK(row == doc.rows.size());
  }
}

TEST_CASE("parse rejects malformed exports") {
  CHECK_THROWS_AS(parse_export_csv("series,x\n"), Error);
  CHECK_THROWS_AS(parse_export_csv("series,x,y\na,1\n"), Error);
}
