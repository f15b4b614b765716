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


#include "tactiplot/metadata.hpp"

#include <algorithm>
#include <cmath>

#include "tactiplot/error.hpp"
#include "tactiplot/numfmt.hpp"

namespace tactiplot {

namespace {

constexpr std::array<std::string_view, kTextFieldCount> kFieldNames = {
    "plot_title",       "x_axis_title",           "y_axis_title",     "x_axis_labels",
    "y_axis_labels",    "chart_description",      "data_point_description",
    "calibration_value",
};

}  // namespace

std::string_view to_string(TextFieldKind kind) { return kFieldNames[static_cast<std::size_t>(kind)]; }

TextFieldKind parse_text_field_kind(std::string_view text) {
  for (std::size_t i = 0; i < kFieldNames.size(); ++i) {
    if (kFieldNames[i] == text) return static_cast<TextFieldKind>(i);
  }
  throw Error(ErrorCode::InvalidInput, "unknown text field '" + std::string(text) + "'");
}

bool is_label_field(TextFieldKind kind) {
  return kind == TextFieldKind::XAxisLabels || kind == TextFieldKind::YAxisLabels;
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Ocr: return "ocr";
    case Provenance::Manual: return "manual";
    case Provenance::Template: return "template";
  }
  return "manual";
}

Provenance parse_provenance(std::string_view text) {
  if (text == "ocr") return Provenance::Ocr;
  if (text == "manual") return Provenance::Manual;
  if (text == "template") return Provenance::Template;
  throw Error(ErrorCode::InvalidInput, "unknown provenance '" + std::string(text) + "'");
}

std::string_view to_string(Trend trend) {
  switch (trend) {
    case Trend::Increasing: return "increasing";
    case Trend::Decreasing: return "decreasing";
    case Trend::Flat: return "flat";
    case Trend::Mixed: return "mixed";
  }
  return "flat";
}

const std::string& TextMetadata::text(TextFieldKind kind) const {
  static const std::string empty;
  const auto& values = slot(kind).values;
  return values.empty() ? empty : values.front();
}

bool is_numeric_label(std::string_view text) {
  if (parse_number(text)) return true;
  try {
    parse_iso8601(text);
    return true;
  } catch (const Error&) {
    return false;
  }
}

namespace {

std::optional<double> label_value(std::string_view text) {
  if (auto v = parse_number(text)) return v;
  try {
    return parse_iso8601(text).epoch_seconds;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

void TextMetadata::set(TextFieldKind kind, std::vector<std::string> values, Provenance provenance) {
  if (!is_label_field(kind)) {
    if (values.size() > 1) {
      throw Error(ErrorCode::InvalidInput,
                  std::string(to_string(kind)) + " holds a single string, not a list");
    }
    if (values.size() == 1 && values.front().empty()) values.clear();
  } else {
    std::vector<double> numbers;
    for (const auto& v : values) {
      if (auto n = label_value(v)) numbers.push_back(*n);
    }
    if (numbers.size() == values.size() && numbers.size() >= 2) {
      const bool up = std::adjacent_find(numbers.begin(), numbers.end(),
                                         std::greater_equal<>()) == numbers.end();
      const bool down = std::adjacent_find(numbers.begin(), numbers.end(),
                                           std::less_equal<>()) == numbers.end();
      if (!up && !down) {
        throw Error(ErrorCode::InvalidInput,
                    std::string(to_string(kind)) + " must be strictly monotone");
      }
    }
  }
  slots_[index(kind)] = TextSlot{std::move(values), provenance};
}

void TextMetadata::set_text(TextFieldKind kind, std::string value, Provenance provenance) {
  set(kind, std::vector<std::string>{std::move(value)}, provenance);
}

TextFieldKind classify_text_role(const TextBox& box, const BoundingBox& plot) {
  const PixelPoint c = box.bbox.center();
  const bool numeric = is_numeric_label(box.content);
  const bool below = c.y > plot.bottom();
  const bool left = c.x < plot.x;
  // Label bands are one box height deep beyond the plot edge for x labels
  // and three box heights wide for y labels.
  if (below && numeric) return TextFieldKind::XAxisLabels;
  if (left && numeric) return TextFieldKind::YAxisLabels;
  if (c.y < plot.y) return TextFieldKind::PlotTitle;
  if (below && box.bbox.y > plot.bottom() + box.bbox.h) return TextFieldKind::XAxisTitle;
  const bool rotated = box.bbox.h > box.bbox.w;
  if (left && (rotated || box.bbox.right() < plot.x - 3.0 * std::min(box.bbox.h, box.bbox.w))) {
    return TextFieldKind::YAxisTitle;
  }
  return TextFieldKind::DataPointDescription;
}

std::vector<std::string> sort_axis_labels(std::span<const TextBox> boxes, Axis axis) {
  std::vector<const TextBox*> order;
  for (const auto& b : boxes) order.push_back(&b);
  std::stable_sort(order.begin(), order.end(), [axis](const TextBox* a, const TextBox* b) {
    if (axis == Axis::X) return a->bbox.center().x < b->bbox.center().x;
    return a->bbox.center().y > b->bbox.center().y;
  });
  std::vector<std::string> out;
  for (const auto* b : order) out.push_back(b->content);
  return out;
}

double quantile_linear(std::vector<double> values, double p) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "quantile of an empty list");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

SeriesStats compute_stats(std::span<const DataPoint> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "statistics of an empty series");
  SeriesStats s;
  s.first = points.front();
  s.last = points.back();
  s.min = s.max = points.front();
  double sum = 0.0;
  std::vector<double> ys;
  ys.reserve(points.size());
  for (const auto& p : points) {
    if (p.y < s.min.y || (p.y == s.min.y && p.x < s.min.x)) s.min = p;
    if (p.y > s.max.y || (p.y == s.max.y && p.x < s.max.x)) s.max = p;
    sum += p.y;
    ys.push_back(p.y);
  }
  s.mean_y = std::clamp(sum / static_cast<double>(points.size()), s.min.y, s.max.y);

  const double q1 = quantile_linear(ys, 0.25);
  const double q3 = quantile_linear(ys, 0.75);
  const double iqr = q3 - q1;
  const double lo = q1 - 1.5 * iqr;
  const double hi = q3 + 1.5 * iqr;
  for (const auto& p : points) {
    if (p.y < lo || p.y > hi) s.outliers.push_back(p);
  }

  const double range = s.max.y - s.min.y;
  const double net = s.last.y - s.first.y;
  const double band = 0.05 * range;
  if (range == 0.0) {
    s.trend = Trend::Flat;
  } else if (net > band) {
    s.trend = Trend::Increasing;
  } else if (net < -band) {
    s.trend = Trend::Decreasing;
  } else {
    double variation = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) variation += std::abs(points[i].y - points[i - 1].y);
    s.trend = variation <= 2.0 * std::abs(net) ? Trend::Flat : Trend::Mixed;
  }
  return s;
}

}  // namespace tactiplot
