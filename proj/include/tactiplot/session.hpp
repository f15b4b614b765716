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

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tactiplot/calibration.hpp"
#include "tactiplot/image.hpp"
#include "tactiplot/line_extraction.hpp"
#include "tactiplot/metadata.hpp"
#include "tactiplot/page.hpp"

namespace tactiplot {

struct SessionSeries {
  LineSeries line;
  // Full-resolution trace the keypoints were sampled from.
  PixelPolyline trace;

  friend bool operator==(const SessionSeries&, const SessionSeries&) = default;
};

struct RenderOptions {
  PageSpec page;
  // 1: chart construction only, 2: adds per-series statistics.
  int description_level = 2;

  friend bool operator==(const RenderOptions&, const RenderOptions&) = default;
};

// A series may be addressed by position or by id.
using SeriesRef = std::variant<std::size_t, std::string>;

namespace cmd {

struct SetCalibrationPoint {
  Axis axis = Axis::X;
  int anchor = 1;  // 1 or 2
  PixelPoint pixel;
  double value = 0.0;
  std::optional<TimePrecision> precision;
};
struct SetAxisKind {
  Axis axis = Axis::X;
  AxisScaleKind kind = AxisScaleKind::Linear;
};
struct SetCalibration {
  std::optional<CalibrationSet> calibration;
};
struct AddPoint {
  SeriesRef series;
  PixelPoint point;
  std::optional<std::size_t> index;
};
struct MovePoint {
  SeriesRef series;
  std::size_t index = 0;
  PixelPoint to;
  std::optional<PixelPoint> from;
};
struct DeletePoint {
  SeriesRef series;
  std::size_t index = 0;
  std::optional<PixelPoint> point;
};
struct SetTextField {
  TextFieldKind field = TextFieldKind::PlotTitle;
  std::vector<std::string> values;
  Provenance provenance = Provenance::Manual;
};
struct AddSeries {
  SessionSeries series;  // empty id: assigned on apply
  std::optional<std::size_t> index;
};
struct RemoveSeries {
  SeriesRef series;
};
struct ResampleSeries {
  SeriesRef series;
  int count = 2;
};
struct SetKeypoints {
  SeriesRef series;
  PixelPolyline keypoints;
  int count_target = 2;
};
struct RenameSeries {
  SeriesRef series;
  std::string name;
};
struct SetRenderOptions {
  RenderOptions options;
};

}  // namespace cmd

using Command =
    std::variant<cmd::SetCalibrationPoint, cmd::SetAxisKind, cmd::SetCalibration, cmd::AddPoint,
                 cmd::MovePoint, cmd::DeletePoint, cmd::SetTextField, cmd::AddSeries,
                 cmd::RemoveSeries, cmd::ResampleSeries, cmd::SetKeypoints, cmd::RenameSeries,
                 cmd::SetRenderOptions>;

// One accepted mutation: the resolved commands and what undoes them.
struct HistoryEntry {
  std::vector<Command> forward;
  std::vector<Command> inverse;  // applied in reverse order
};

inline constexpr std::size_t kDefaultHistoryDepth = 200;

struct History {
  std::deque<HistoryEntry> undo;
  std::deque<HistoryEntry> redo;
  std::size_t depth = kDefaultHistoryDepth;
};

struct ChartSession {
  std::string token;
  std::shared_ptr<const RasterImage> image;
  // Original upload, kept for persistence.
  std::shared_ptr<const std::vector<std::uint8_t>> image_bytes;
  std::optional<CalibrationSet> calibration;
  std::vector<SessionSeries> series;
  TextMetadata metadata;
  RenderOptions options;
  History history;
  std::uint64_t version = 0;
  bool consent = false;
};

// Parts of the session the undo law talks about: everything except
// version, history and identity.
bool same_content(const ChartSession& a, const ChartSession& b);

// Applies one command in place after validating it against the current
// state. Returns {resolved forward command, inverse command}.
std::pair<Command, Command> apply_command(ChartSession& session, const Command& command);

// All-or-nothing: every command is validated against the progressively
// updated copy; on any failure `session` is untouched and the error
// propagates. On success returns the history entry (not yet recorded).
HistoryEntry apply_commands(ChartSession& session, const std::vector<Command>& commands);

// Records a mutation: pushes history (bounded), clears redo, bumps version.
void commit_mutation(ChartSession& session, HistoryEntry entry);

enum class HistoryStatus { Applied, EmptyHistory };
HistoryStatus undo(ChartSession& session);
HistoryStatus redo(ChartSession& session);

std::size_t resolve_series(const ChartSession& session, const SeriesRef& ref);

struct CompletenessReport {
  // Blocking: exports refuse to run while any remain.
  std::vector<std::string> missing;
  std::vector<std::string> warnings;

  bool complete() const { return missing.empty(); }
};

CompletenessReport completeness(const ChartSession& session);

// Throws Error(IncompleteSession) naming every blocking item.
void require_complete(const ChartSession& session);

// Session with default calibration for `image`; no token, version 0.
ChartSession make_session(std::shared_ptr<const RasterImage> image,
                          std::shared_ptr<const std::vector<std::uint8_t>> image_bytes,
                          bool consent);

}  // namespace tactiplot
