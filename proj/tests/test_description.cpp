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


#include "doctest.h"
#include "support.hpp"
#include "tactiplot/description.hpp"
#include "tactiplot/error.hpp"

using namespace tactiplot;
using tactiplot::testing::sales_session;

TEST_CASE("golden description of the sales chart") {
  const auto s = sales_session();
  CHECK(generate_description(s) ==
        "Line chart titled 'Sales'. The x-axis shows Year from 2010 to 2020. The y-axis shows Units from 0 "
        "to 50. It contains 1 line. Line 1 rises overall, from a minimum of 5 at Year 2010 to a maximum of "
        "42 at Year 2019. No outliers detected.");
}

TEST_CASE("untitled chart and axes") {
  auto s = sales_session();
  s.metadata.set_text(TextFieldKind::PlotTitle, "", Provenance::Manual);
  s.metadata.set_text(TextFieldKind::XAxisTitle, "", Provenance::Manual);
  const auto text = generate_description(s);
  CHECK(text.rfind("Line chart (untitled).", 0) == 0);
  CHECK(text.find("The x-axis (untitled) shows values from 2010 to 2020.") != std::string::npos);
  CHECK(text.find("at x = 2019") != std::string::npos);
}

TEST_CASE("level 1 omits per-series sentences") {
  auto s = sales_session();
  s.options.description_level = 1;
  CHECK(generate_description(s) ==
        "Line chart titled 'Sales'. The x-axis shows Year from 2010 to 2020. The y-axis shows Units from 0 "
        "to 50. It contains 1 line.");
}

TEST_CASE("falling and plural forms") {
  auto s = sales_session();
  auto second = s.series.front();
  second.line.id = "s2";
  second.line.name = "Returns";
  const auto& cal = *s.calibration;
  second.line.keypoints = {data_to_pixel(cal, {2010, 30}), data_to_pixel(cal, {2015, 20}),
                           data_to_pixel(cal, {2020, 10})};
  s.series.push_back(second);
  const auto text = generate_description(s);
  CHECK(text.find("It contains 2 lines.") != std::string::npos);
  CHECK(text.find("Returns falls overall, from a maximum of 30 at Year 2010 to a minimum of 10 at Year 2020.") !=
        std::string::npos);
}

TEST_CASE("time axes print ISO dates") {
  auto s = sales_session();
  auto& x = s.calibration->x_axis;
  x.kind = AxisScaleKind::Time;
  x.time_precision = TimePrecision::Date;
  x.p1.value = parse_iso8601("2020-01-01").epoch_seconds;
  x.p2.value = parse_iso8601("2020-01-31").epoch_seconds;
  s.metadata.set(TextFieldKind::XAxisLabels, {}, Provenance::Manual);
  const auto text = generate_description(s);
  CHECK(text.find("from 2020-01-01 to 2020-01-31") != std::string::npos);
  CHECK(format_axis_value(x, parse_iso8601("2020-01-06").epoch_seconds, 4) == "2020-01-06");
}

TEST_CASE("description needs series and calibration") {
  auto s = sales_session();
  s.series.clear();
  CHECK_THROWS_AS(generate_description(s), Error);
  auto t = sales_session();
  t.calibration.reset();
  CHECK_THROWS_AS(generate_description(t), Error);
}

TEST_CASE("deterministic output") {
  const auto s = sales_session();
  CHECK(generate_description(s) == generate_description(s));
  CHECK(describe_series(s, 0).find("Line 1 rises overall") == 0);
}
