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

#include "tactiplot/metadata.hpp"
#include "tactiplot/session.hpp"

namespace tactiplot {

// Template-filled English description. Level 1 covers the chart's
// construction (title, axes with ranges, line count); level 2 adds one
// paragraph per series with extremes, trend and outlier count. Numbers carry
// at most 4 significant digits; Time values print as ISO-8601.
//
// Template (fixed; golden tests depend on it):
//   Line chart titled '<title>'.          | Line chart (untitled).
//   The x-axis shows <title> from <lo> to <hi>.
//                                         | The x-axis (untitled) shows values from <lo> to <hi>.
//   (same for the y-axis)
//   It contains <n> line[s].
//   <name> rises overall, from a minimum of <v> at <loc> to a maximum of <v> at <loc>.
//   <name> falls overall, from a maximum of <v> at <loc> to a minimum of <v> at <loc>.
//   <name> stays flat overall, between a minimum of <v> at <loc> and a maximum of <v> at <loc>.
//   <name> fluctuates, with a minimum of <v> at <loc> and a maximum of <v> at <loc>.
//   No outliers detected. | 1 outlier detected. | <k> outliers detected.
// <loc> is "<x-axis title> <x>" or "x = <x>" when the x-axis is untitled.
std::string generate_description(const ChartSession& session);

// The level-2 sentences for one series.
std::string describe_series(const ChartSession& session, std::size_t series_index);

// A data value on `axis` as it appears in prose and labels.
std::string format_axis_value(const AxisCalibration& axis, double value, int digits);

}  // namespace tactiplot
