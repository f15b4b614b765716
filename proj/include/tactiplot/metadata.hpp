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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tactiplot/calibration.hpp"
#include "tactiplot/geometry.hpp"

namespace tactiplot {

struct TextBox {
  BoundingBox bbox;
  std::string content;
  double confidence = 1.0;

  friend bool operator==(const TextBox&, const TextBox&) = default;
};

// OCR suggestions below this confidence are flagged, never dropped.
inline constexpr double kLowConfidence = 0.5;

enum class TextFieldKind {
  PlotTitle,
  XAxisTitle,
  YAxisTitle,
  XAxisLabels,
  YAxisLabels,
  ChartDescription,
  DataPointDescription,
  CalibrationValue,
};
inline constexpr std::size_t kTextFieldCount = 8;

std::string_view to_string(TextFieldKind kind);
TextFieldKind parse_text_field_kind(std::string_view text);
bool is_label_field(TextFieldKind kind);

enum class Provenance { Ocr, Manual, Template };
std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view text);

struct TextSlot {
  // Label fields hold an ordered list; the others hold at most one entry.
  std::vector<std::string> values;
  Provenance provenance = Provenance::Manual;

  friend bool operator==(const TextSlot&, const TextSlot&) = default;
};

class TextMetadata {
 public:
  const TextSlot& slot(TextFieldKind kind) const { return slots_[index(kind)]; }

  // Empty string when unset.
  const std::string& text(TextFieldKind kind) const;
  const std::vector<std::string>& labels(TextFieldKind kind) const { return slot(kind).values; }

  // Rejects lists on single-value fields and numeric label lists that are
  // not strictly monotone.
  void set(TextFieldKind kind, std::vector<std::string> values, Provenance provenance);
  void set_text(TextFieldKind kind, std::string value, Provenance provenance);

  friend bool operator==(const TextMetadata&, const TextMetadata&) = default;

 private:
  static std::size_t index(TextFieldKind kind) { return static_cast<std::size_t>(kind); }
  std::array<TextSlot, kTextFieldCount> slots_{};
};

// Numbers in plain or scientific notation, or ISO-8601 dates.
bool is_numeric_label(std::string_view text);

TextFieldKind classify_text_role(const TextBox& box, const BoundingBox& plot_region);

std::vector<std::string> sort_axis_labels(std::span<const TextBox> boxes, Axis axis);

enum class Trend { Increasing, Decreasing, Flat, Mixed };
std::string_view to_string(Trend trend);

struct SeriesStats {
  DataPoint min;
  DataPoint max;
  DataPoint first;
  DataPoint last;
  double mean_y = 0.0;
  std::vector<DataPoint> outliers;
  Trend trend = Trend::Flat;
};

// Quartiles by linear interpolation between order statistics (R type 7).
double quantile_linear(std::vector<double> values, double p);

SeriesStats compute_stats(std::span<const DataPoint> points);

}  // namespace tactiplot
