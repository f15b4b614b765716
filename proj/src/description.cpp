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


#include "tactiplot/description.hpp"

#include <algorithm>

#include "tactiplot/error.hpp"
#include "tactiplot/numfmt.hpp"

namespace tactiplot {

namespace {

constexpr int kProseDigits = 4;

const char* kUntitled = "untitled";

std::string format_label(const AxisCalibration& axis, const std::string& label) {
  if (auto v = parse_number(label)) {
    if (axis.kind != AxisScaleKind::Time) return format_significant(*v, kProseDigits);
  }
  return label;
}

std::string axis_sentence(const ChartSession& s, Axis which) {
  const bool is_x = which == Axis::X;
  const auto& md = s.metadata;
  const std::string& title = md.text(is_x ? TextFieldKind::XAxisTitle : TextFieldKind::YAxisTitle);
  const auto& labels = md.labels(is_x ? TextFieldKind::XAxisLabels : TextFieldKind::YAxisLabels);
  const AxisCalibration& axis = is_x ? s.calibration->x_axis : s.calibration->y_axis;

  std::string lo;
  std::string hi;
  if (!labels.empty()) {
    lo = format_label(axis, labels.front());
    hi = format_label(axis, labels.back());
  } else {
    double vmin = 0.0;
    double vmax = 0.0;
    bool first = true;
    for (const auto& series : s.series) {
      for (const auto& d : series_to_data(series.line, *s.calibration)) {
        const double v = is_x ? d.x : d.y;
        if (first || v < vmin) vmin = v;
        if (first || v > vmax) vmax = v;
        first = false;
      }
    }
    lo = format_axis_value(axis, vmin, kProseDigits);
    hi = format_axis_value(axis, vmax, kProseDigits);
  }
  const std::string name = is_x ? "x-axis" : "y-axis";
  if (title.empty()) {
    return "The " + name + " (" + kUntitled + ") shows values from " + lo + " to " + hi + ".";
  }
  return "The " + name + " shows " + title + " from " + lo + " to " + hi + ".";
}

void require_describable(const ChartSession& s) {
  if (s.series.empty()) throw Error(ErrorCode::IncompleteSession, "no digitized series to describe");
  if (!s.calibration || !validate_calibration(*s.calibration).empty()) {
    throw Error(ErrorCode::IncompleteSession, "calibration is missing or invalid");
  }
}

}  // namespace

std::string format_axis_value(const AxisCalibration& axis, double value, int digits) {
  if (axis.kind == AxisScaleKind::Time) return format_iso8601(value, axis.time_precision);
  return format_significant(value, digits);
}

std::string describe_series(const ChartSession& s, std::size_t series_index) {
  require_describable(s);
  const auto& entry = s.series.at(series_index);
  const auto data = series_to_data(entry.line, *s.calibration);
  const SeriesStats st = compute_stats(data);
  const AxisCalibration& xa = s.calibration->x_axis;
  const AxisCalibration& ya = s.calibration->y_axis;
  const std::string& x_title = s.metadata.text(TextFieldKind::XAxisTitle);

  auto loc = [&](const DataPoint& p) {
    const std::string x = format_axis_value(xa, p.x, kProseDigits);
    return x_title.empty() ? "x = " + x : x_title + " " + x;
  };
  auto val = [&](const DataPoint& p) { return format_axis_value(ya, p.y, kProseDigits); };

  const std::string name = entry.line.name.empty() ? std::string("Unnamed line") : entry.line.name;
  const std::string min_part = "a minimum of " + val(st.min) + " at " + loc(st.min);
  const std::string max_part = "a maximum of " + val(st.max) + " at " + loc(st.max);

  std::string out;
  switch (st.trend) {
    case Trend::Increasing:
      out = name + " rises overall, from " + min_part + " to " + max_part + ".";
      break;
    case Trend::Decreasing:
      out = name + " falls overall, from " + max_part + " to " + min_part + ".";
      break;
    case Trend::Flat:
      out = name + " stays flat overall, between " + min_part + " and " + max_part + ".";
      break;
    case Trend::Mixed:
      out = name + " fluctuates, with " + min_part + " and " + max_part + ".";
      break;
  }
  const std::size_t k = st.outliers.size();
  if (k == 0) {
    out += " No outliers detected.";
  } else if (k == 1) {
    out += " 1 outlier detected.";
  } else {
    out += " " + std::to_string(k) + " outliers detected.";
  }
  return out;
}

std::string generate_description(const ChartSession& s) {
  require_describable(s);
  const std::string& title = s.metadata.text(TextFieldKind::PlotTitle);
  std::string out = title.empty() ? std::string("Line chart (untitled).")
                                  : "Line chart titled '" + title + "'.";
  out += " " + axis_sentence(s, Axis::X);
  out += " " + axis_sentence(s, Axis::Y);
  const std::size_t n = s.series.size();
  out += " It contains " + std::to_string(n) + (n == 1 ? " line." : " lines.");
  if (s.options.description_level >= 2) {
    for (std::size_t i = 0; i < n; ++i) out += " " + describe_series(s, i);
  }
  return out;
}

}  // namespace tactiplot
