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


#include "tactiplot/session.hpp"

#include <algorithm>
#include <cmath>

#include "tactiplot/error.hpp"

namespace tactiplot {

namespace {

[[noreturn]] void reject(const std::string& why) { throw Error(ErrorCode::InvalidCommand, why); }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string next_series_id(const ChartSession& session) {
  long highest = 0;
  for (const auto& s : session.series) {
    const auto& id = s.line.id;
    if (id.size() > 1 && id[0] == 's' &&
        std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      highest = std::max(highest, std::stol(id.substr(1)));
    }
  }
  return "s" + std::to_string(highest + 1);
}

// Stable sort by px_x and drop consecutive duplicates.
PixelPolyline normalize_keypoints(PixelPolyline pts) {
  for (const auto& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) reject("keypoints must be finite");
  }
  std::stable_sort(pts.begin(), pts.end(),
                   [](const PixelPoint& a, const PixelPoint& b) { return a.x < b.x; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

void check_page(const PageSpec& page) {
  if (!(page.width_mm > 40.0 && page.height_mm > 40.0)) reject("page must exceed 40 mm per side");
  if (!(page.margin_mm >= kMinBrailleClearanceMm)) reject("page margin must be at least 3.0 mm");
  if (!(page.braille_clearance_mm >= kMinBrailleClearanceMm)) {
    reject("Braille clearance must be at least 3.0 mm");
  }
  if (!(page.cell_width_mm > 0.0 && page.cell_height_mm > 0.0)) reject("Braille cell must be positive");
}

void check_anchor(const ChartSession& session, const PixelPoint& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) reject("calibration pixel must be finite");
  if (session.image && !anchor_within_image(p, session.image->width(), session.image->height())) {
    reject("calibration point lies outside the image margin");
  }
}

AxisCalibration& axis_of(CalibrationSet& set, Axis axis) {
  return axis == Axis::X ? set.x_axis : set.y_axis;
}

EditAction to_action(const std::string& id, const cmd::AddPoint& c) {
  return AddPoint{id, c.point, c.index};
}
EditAction to_action(const std::string& id, const cmd::MovePoint& c) {
  return MovePoint{id, c.index, c.from.value_or(PixelPoint{}), c.to};
}
EditAction to_action(const std::string& id, const cmd::DeletePoint& c) {
  return DeletePoint{id, c.index, c.point.value_or(PixelPoint{})};
}

Command to_command(const EditAction& action) {
  return std::visit(overloaded{
                        [](const tactiplot::AddPoint& a) -> Command {
                          return cmd::AddPoint{a.series_id, a.point, a.index};
                        },
                        [](const tactiplot::MovePoint& a) -> Command {
                          return cmd::MovePoint{a.series_id, a.index, a.to, a.from};
                        },
                        [](const tactiplot::DeletePoint& a) -> Command {
                          return cmd::DeletePoint{a.series_id, a.index, a.point};
                        },
                    },
                    action);
}

template <class PointCommand>
std::pair<Command, Command> apply_point_edit(ChartSession& s, const PointCommand& c) {
  const std::size_t idx = resolve_series(s, c.series);
  LineSeries& line = s.series[idx].line;
  EditAction action = to_action(line.id, c);
  const EditAction resolved = resolve_edit(line, action);
  // Caller-supplied from/point must match the current state.
  if constexpr (std::is_same_v<PointCommand, cmd::MovePoint>) {
    if (c.from && std::get<tactiplot::MovePoint>(resolved).from != *c.from) {
      throw Error(ErrorCode::InvalidEdit, "move does not match the current point");
    }
  } else if constexpr (std::is_same_v<PointCommand, cmd::DeletePoint>) {
    if (c.point && std::get<tactiplot::DeletePoint>(resolved).point != *c.point) {
      throw Error(ErrorCode::InvalidEdit, "delete does not match the current point");
    }
  }
  line = apply_edit(line, resolved);
  return {to_command(resolved), to_command(invert(resolved))};
}

}  // namespace

std::size_t resolve_series(const ChartSession& session, const SeriesRef& ref) {
  if (const auto* index = std::get_if<std::size_t>(&ref)) {
    if (*index >= session.series.size()) {
      reject("series index " + std::to_string(*index) + " out of range");
    }
    return *index;
  }
  const auto& id = std::get<std::string>(ref);
  for (std::size_t i = 0; i < session.series.size(); ++i) {
    if (session.series[i].line.id == id) return i;
  }
  reject("unknown series '" + id + "'");
}

std::pair<Command, Command> apply_command(ChartSession& s, const Command& command) {
  return std::visit(
      overloaded{
          [&](const cmd::SetCalibrationPoint& c) -> std::pair<Command, Command> {
            if (c.anchor != 1 && c.anchor != 2) reject("calibration anchor must be 1 or 2");
            if (!std::isfinite(c.value)) reject("calibration value must be finite");
            check_anchor(s, c.pixel);
            const auto old = s.calibration;
            if (!s.calibration) {
              if (!s.image) reject("no image to place calibration on");
              s.calibration = default_calibration(s.image->width(), s.image->height());
            }
            AxisCalibration& axis = axis_of(*s.calibration, c.axis);
            CalibrationPoint& anchor = c.anchor == 1 ? axis.p1 : axis.p2;
            anchor = {c.pixel, c.value};
            if (c.precision) axis.time_precision = *c.precision;
            return {c, cmd::SetCalibration{old}};
          },
          [&](const cmd::SetAxisKind& c) -> std::pair<Command, Command> {
            if (!s.calibration) reject("no calibration to change");
            const auto old = s.calibration;
            axis_of(*s.calibration, c.axis).kind = c.kind;
            return {c, cmd::SetCalibration{old}};
          },
          [&](const cmd::SetCalibration& c) -> std::pair<Command, Command> {
            if (c.calibration) {
              if (c.calibration->x_axis.reads != Axis::X || c.calibration->y_axis.reads != Axis::Y) {
                reject("x-axis must read px_x and y-axis px_y");
              }
              for (const auto* a : {&c.calibration->x_axis, &c.calibration->y_axis}) {
                check_anchor(s, a->p1.pixel);
                check_anchor(s, a->p2.pixel);
              }
            }
            const auto old = s.calibration;
            s.calibration = c.calibration;
            return {c, cmd::SetCalibration{old}};
          },
          [&](const cmd::AddPoint& c) { return apply_point_edit(s, c); },
          [&](const cmd::MovePoint& c) { return apply_point_edit(s, c); },
          [&](const cmd::DeletePoint& c) { return apply_point_edit(s, c); },
          [&](const cmd::SetTextField& c) -> std::pair<Command, Command> {
            const TextSlot old = s.metadata.slot(c.field);
            s.metadata.set(c.field, c.values, c.provenance);
            return {c, cmd::SetTextField{c.field, old.values, old.provenance}};
          },
          [&](const cmd::AddSeries& c) -> std::pair<Command, Command> {
            SessionSeries series = c.series;
            series.line.keypoints = normalize_keypoints(series.line.keypoints);
            if (series.trace.empty() && series.line.keypoints.empty()) {
              reject("a series needs keypoints or a trace");
            }
            if (series.line.keypoints.empty()) {
              if (series.trace.size() < 2) reject("a trace needs at least 2 points");
              const int n = series.line.keypoint_count_target >= 2
                                ? series.line.keypoint_count_target
                                : default_keypoint_count(series.trace);
              try {
                series.line.keypoints = normalize_keypoints(sample_equidistant(series.trace, n));
              } catch (const Error& e) {
                reject(e.what());
              }
              series.line.keypoint_count_target = n;
            }
            if (series.trace.empty()) series.trace = series.line.keypoints;
            if (series.line.keypoint_count_target < 1) {
              series.line.keypoint_count_target = static_cast<int>(series.line.keypoints.size());
            }
            if (series.line.id.empty()) {
              series.line.id = next_series_id(s);
            } else {
              for (const auto& other : s.series) {
                if (other.line.id == series.line.id) reject("duplicate series id '" + series.line.id + "'");
              }
            }
            const std::size_t at = c.index.value_or(s.series.size());
            if (at > s.series.size()) reject("series insert position out of range");
            s.series.insert(s.series.begin() + static_cast<std::ptrdiff_t>(at), series);
            return {cmd::AddSeries{series, at}, cmd::RemoveSeries{series.line.id}};
          },
          [&](const cmd::RemoveSeries& c) -> std::pair<Command, Command> {
            const std::size_t idx = resolve_series(s, c.series);
            SessionSeries removed = s.series[idx];
            s.series.erase(s.series.begin() + static_cast<std::ptrdiff_t>(idx));
            return {cmd::RemoveSeries{removed.line.id}, cmd::AddSeries{removed, idx}};
          },
          [&](const cmd::ResampleSeries& c) -> std::pair<Command, Command> {
            const std::size_t idx = resolve_series(s, c.series);
            auto& entry = s.series[idx];
            if (c.count < 2) reject("resample count must be at least 2");
            LineSeries old = entry.line;
            try {
              entry.line = resample_series(entry.line, c.count, entry.trace);
            } catch (const Error& e) {
              reject(e.what());
            }
            entry.line.keypoints = normalize_keypoints(entry.line.keypoints);
            return {cmd::SetKeypoints{entry.line.id, entry.line.keypoints, c.count},
                    cmd::SetKeypoints{old.id, old.keypoints, old.keypoint_count_target}};
          },
          [&](const cmd::SetKeypoints& c) -> std::pair<Command, Command> {
            const std::size_t idx = resolve_series(s, c.series);
            auto& line = s.series[idx].line;
            PixelPolyline pts = normalize_keypoints(c.keypoints);
            if (pts.empty()) reject("a series keeps at least one point");
            if (c.count_target < 1) reject("keypoint count target must be positive");
            LineSeries old = line;
            line.keypoints = std::move(pts);
            line.keypoint_count_target = c.count_target;
            return {cmd::SetKeypoints{line.id, line.keypoints, c.count_target},
                    cmd::SetKeypoints{old.id, old.keypoints, old.keypoint_count_target}};
          },
          [&](const cmd::RenameSeries& c) -> std::pair<Command, Command> {
            const std::size_t idx = resolve_series(s, c.series);
            auto& line = s.series[idx].line;
            std::string old = line.name;
            line.name = c.name;
            return {cmd::RenameSeries{line.id, c.name}, cmd::RenameSeries{line.id, old}};
          },
          [&](const cmd::SetRenderOptions& c) -> std::pair<Command, Command> {
            check_page(c.options.page);
            if (c.options.description_level < 1 || c.options.description_level > 2) {
              reject("description level must be 1 or 2");
            }
            RenderOptions old = s.options;
            s.options = c.options;
            return {c, cmd::SetRenderOptions{old}};
          },
      },
      command);
}

HistoryEntry apply_commands(ChartSession& session, const std::vector<Command>& commands) {
  if (commands.empty()) reject("a patch needs at least one command");
  ChartSession draft = session;
  HistoryEntry entry;
  for (const auto& c : commands) {
    auto [forward, inverse] = apply_command(draft, c);
    entry.forward.push_back(std::move(forward));
    entry.inverse.push_back(std::move(inverse));
  }
  session.calibration = std::move(draft.calibration);
  session.series = std::move(draft.series);
  session.metadata = std::move(draft.metadata);
  session.options = std::move(draft.options);
  return entry;
}

void commit_mutation(ChartSession& session, HistoryEntry entry) {
  auto& h = session.history;
  h.undo.push_back(std::move(entry));
  while (h.undo.size() > h.depth) h.undo.pop_front();
  h.redo.clear();
  ++session.version;
}

namespace {

void replay(ChartSession& session, const std::vector<Command>& commands) {
  ChartSession draft = session;
  for (const auto& c : commands) apply_command(draft, c);
  session.calibration = std::move(draft.calibration);
  session.series = std::move(draft.series);
  session.metadata = std::move(draft.metadata);
  session.options = std::move(draft.options);
}

}  // namespace

HistoryStatus undo(ChartSession& session) {
  auto& h = session.history;
  if (h.undo.empty()) return HistoryStatus::EmptyHistory;
  HistoryEntry entry = std::move(h.undo.back());
  h.undo.pop_back();
  std::vector<Command> reversed(entry.inverse.rbegin(), entry.inverse.rend());
  replay(session, reversed);
  h.redo.push_back(std::move(entry));
  ++session.version;
  return HistoryStatus::Applied;
}

HistoryStatus redo(ChartSession& session) {
  auto& h = session.history;
  if (h.redo.empty()) return HistoryStatus::EmptyHistory;
  HistoryEntry entry = std::move(h.redo.back());
  h.redo.pop_back();
  replay(session, entry.forward);
  h.undo.push_back(std::move(entry));
  while (h.undo.size() > h.depth) h.undo.pop_front();
  ++session.version;
  return HistoryStatus::Applied;
}

bool same_content(const ChartSession& a, const ChartSession& b) {
  return a.calibration == b.calibration && a.series == b.series && a.metadata == b.metadata &&
         a.options == b.options;
}

CompletenessReport completeness(const ChartSession& session) {
  CompletenessReport report;
  if (!session.calibration || !validate_calibration(*session.calibration).empty()) {
    report.missing.push_back("calibration");
  } else if (session.image &&
             *session.calibration ==
                 default_calibration(session.image->width(), session.image->height())) {
    report.warnings.push_back("calibration still at default anchors");
  }
  if (session.series.empty()) report.missing.push_back("series");
  const auto& md = session.metadata;
  if (md.text(TextFieldKind::PlotTitle).empty()) report.warnings.push_back("plot_title");
  if (md.text(TextFieldKind::XAxisTitle).empty()) report.warnings.push_back("x_axis_title");
  if (md.text(TextFieldKind::YAxisTitle).empty()) report.warnings.push_back("y_axis_title");
  if (md.labels(TextFieldKind::XAxisLabels).empty()) report.warnings.push_back("x_axis_labels");
  if (md.labels(TextFieldKind::YAxisLabels).empty()) report.warnings.push_back("y_axis_labels");
  return report;
}

void require_complete(const ChartSession& session) {
  const auto report = completeness(session);
  if (report.complete()) return;
  std::string msg = "session incomplete; missing:";
  for (const auto& m : report.missing) msg += " " + m;
  throw Error(ErrorCode::IncompleteSession, msg);
}

ChartSession make_session(std::shared_ptr<const RasterImage> image,
                          std::shared_ptr<const std::vector<std::uint8_t>> image_bytes,
                          bool consent) {
  ChartSession s;
  s.calibration = default_calibration(image->width(), image->height());
  s.image = std::move(image);
  s.image_bytes = std::move(image_bytes);
  s.consent = consent;
  return s;
}

}  // namespace tactiplot
