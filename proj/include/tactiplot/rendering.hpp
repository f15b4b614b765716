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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tactiplot/page.hpp"
#include "tactiplot/session.hpp"

namespace tactiplot {

enum class RenderMode { DigitalAccessible, PrintAccessible };

enum class StrokePattern { Solid, Dashed, Dotted };
std::string_view to_string(StrokePattern pattern);

struct TactileStyle {
  StrokePattern pattern = StrokePattern::Solid;
  double stroke_width_mm = 1.0;

  // SVG stroke-dasharray in millimetres; empty for solid.
  std::string dasharray() const;

  friend bool operator==(const TactileStyle&, const TactileStyle&) = default;
};

struct StyleAssignment {
  std::vector<TactileStyle> styles;
  // More series than distinguishable styles; the cycle repeats.
  bool repeats = false;
};

// solid/dashed/dotted at 1.0 mm, then at 1.6 mm, then repeat.
StyleAssignment assign_line_styles(std::size_t n);

// Budget k = clamp(floor(axis_length / (max_cells * cell_width + 2 * 3.0)), 3, 5)
// and picks indices round_half_up(i * (n - 1) / (k - 1)). Inputs of at most
// three labels pass through.
std::vector<std::string> reduce_axis_labels(const std::vector<std::string>& labels,
                                            double available_axis_length_mm,
                                            double cell_width_mm = kBrailleCellWidthMm);
// Uses the page's printable extent along the axis.
std::vector<std::string> reduce_axis_labels(const std::vector<std::string>& labels,
                                            const PageSpec& page, Axis axis);

struct RenderResult {
  std::string svg;
  std::vector<std::string> warnings;
};

// Throws Error(IncompleteSession) naming what is missing.
RenderResult render_svg(const ChartSession& session, RenderMode mode, const PageSpec& page);
inline RenderResult render_svg(const ChartSession& session, RenderMode mode) {
  return render_svg(session, mode, session.options.page);
}

std::string export_csv(const ChartSession& session);

struct CsvRow {
  std::string series;
  std::string x;
  std::string y;
};

struct CsvDocument {
  std::map<std::string, std::string> metadata;
  std::vector<CsvRow> rows;
};

CsvDocument parse_export_csv(std::string_view text);

// A number or an ISO-8601 time (as epoch seconds).
double parse_csv_value(std::string_view text);

// Empty iff the SVG meets the tactile print rules for `page`.
// Throws Error(Format) when the input is not parsable SVG.
std::vector<std::string> validate_print_constraints(std::string_view svg_print, const PageSpec& page);

struct ExportBundle {
  std::string svg_digital;
  std::string svg_print;
  std::string csv;
  std::string description;
  std::vector<std::string> warnings;
};

ExportBundle export_bundle(const ChartSession& session);

}  // namespace tactiplot
