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


#include "tactiplot/session_json.hpp"

#include <cmath>

#include "tactiplot/error.hpp"

namespace tactiplot {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorCode::InvalidCommand, why); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad(std::string(what) + " must be finite");
  return v;
}

std::string string(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::size_t count(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Json point_json(const PixelPoint& p) { return Json::array({p.x, p.y}); }

PixelPoint point_from(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) bad(std::string(what) + " must be [x, y]");
  return {number(j[0], what), number(j[1], what)};
}

Json polyline_json(const PixelPolyline& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(point_json(p));
  return out;
}

PixelPolyline polyline_from(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of [x, y]");
  PixelPolyline out;
  for (const auto& p : j) out.push_back(point_from(p, what));
  return out;
}

std::string axis_name(Axis a) { return a == Axis::X ? "x" : "y"; }

Axis axis_from(const Json& j) {
  const std::string s = string(j, "axis");
  if (s == "x") return Axis::X;
  if (s == "y") return Axis::Y;
  bad("axis must be 'x' or 'y'");
}

std::string precision_name(TimePrecision p) { return p == TimePrecision::Date ? "date" : "datetime"; }

TimePrecision precision_from(const Json& j) {
  const std::string s = string(j, "precision");
  if (s == "date") return TimePrecision::Date;
  if (s == "datetime") return TimePrecision::DateTime;
  bad("precision must be 'date' or 'datetime'");
}

Json series_ref_json(const SeriesRef& ref) {
  return std::visit([](const auto& v) { return Json(v); }, ref);
}

SeriesRef series_ref_from(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return count(j, "series");
}

Json axis_json(const AxisCalibration& a) {
  return {{"p1", {{"pixel", point_json(a.p1.pixel)}, {"value", a.p1.value}}},
          {"p2", {{"pixel", point_json(a.p2.pixel)}, {"value", a.p2.value}}},
          {"kind", std::string(to_string(a.kind))},
          {"time_precision", precision_name(a.time_precision)}};
}

CalibrationPoint anchor_from(const Json& j, AxisScaleKind kind, TimePrecision* precision) {
  CalibrationPoint p;
  p.pixel = point_from(field(j, "pixel"), "pixel");
  const Json& v = field(j, "value");
  if (v.is_string()) {
    try {
      p.value = parse_axis_value(v.get<std::string>(), kind, precision);
    } catch (const Error& e) {
      bad(e.what());
    }
  } else {
    p.value = number(v, "value");
  }
  return p;
}

AxisCalibration axis_from_json(const Json& j, Axis reads) {
  AxisCalibration a;
  a.reads = reads;
  if (j.contains("kind")) {
    try {
      a.kind = parse_scale_kind(string(j.at("kind"), "kind"));
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  TimePrecision parsed = TimePrecision::DateTime;
  a.p1 = anchor_from(field(j, "p1"), a.kind, &parsed);
  a.p2 = anchor_from(field(j, "p2"), a.kind, &parsed);
  a.time_precision = j.contains("time_precision") ? precision_from(j.at("time_precision")) : parsed;
  return a;
}

Json page_json(const PageSpec& p) {
  return {{"width_mm", p.width_mm},
          {"height_mm", p.height_mm},
          {"margin_mm", p.margin_mm},
          {"braille_clearance_mm", p.braille_clearance_mm},
          {"cell_width_mm", p.cell_width_mm},
          {"cell_height_mm", p.cell_height_mm}};
}

std::vector<std::string> text_values(const Json& j) {
  std::vector<std::string> out;
  if (j.is_null()) return out;
  if (j.is_string()) {
    if (!j.get<std::string>().empty()) out.push_back(j.get<std::string>());
    return out;
  }
  if (!j.is_array()) bad("value must be a string or a list of strings");
  for (const auto& v : j) out.push_back(string(v, "value"));
  return out;
}

Json history_json(const std::deque<HistoryEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    Json fwd = Json::array(), inv = Json::array();
    for (const auto& c : e.forward) fwd.push_back(to_json(c));
    for (const auto& c : e.inverse) inv.push_back(to_json(c));
    out.push_back({{"forward", fwd}, {"inverse", inv}});
  }
  return out;
}

std::deque<HistoryEntry> history_from(const Json& j) {
  std::deque<HistoryEntry> out;
  for (const auto& e : j) {
    HistoryEntry entry;
    for (const auto& c : field(e, "forward")) entry.forward.push_back(command_from_json(c));
    for (const auto& c : field(e, "inverse")) entry.inverse.push_back(command_from_json(c));
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

Json to_json(const CalibrationSet& c) { return {{"x", axis_json(c.x_axis)}, {"y", axis_json(c.y_axis)}}; }

CalibrationSet calibration_from_json(const Json& j) {
  return {axis_from_json(field(j, "x"), Axis::X), axis_from_json(field(j, "y"), Axis::Y)};
}

Json to_json(const RenderOptions& o) {
  return {{"page", page_json(o.page)}, {"description_level", o.description_level}};
}

RenderOptions render_options_from_json(const Json& j, const RenderOptions& base) {
  if (!j.is_object()) bad("options must be an object");
  RenderOptions o = base;
  if (j.contains("page")) {
    const Json& p = j.at("page");
    if (!p.is_object()) bad("page must be an object");
    auto opt = [&p](const char* key, double& out) {
      if (p.contains(key)) out = number(p.at(key), key);
    };
    opt("width_mm", o.page.width_mm);
    opt("height_mm", o.page.height_mm);
    opt("margin_mm", o.page.margin_mm);
    opt("braille_clearance_mm", o.page.braille_clearance_mm);
    opt("cell_width_mm", o.page.cell_width_mm);
    opt("cell_height_mm", o.page.cell_height_mm);
  }
  if (j.contains("description_level")) {
    o.description_level = static_cast<int>(count(j.at("description_level"), "description_level"));
  }
  return o;
}

Json to_json(const TextMetadata& md) {
  Json out = Json::object();
  for (std::size_t i = 0; i < kTextFieldCount; ++i) {
    const auto kind = static_cast<TextFieldKind>(i);
    const auto& slot = md.slot(kind);
    out[std::string(to_string(kind))] = {{"values", slot.values},
                                         {"provenance", std::string(to_string(slot.provenance))}};
  }
  return out;
}

Json to_json(const SessionSeries& s, bool with_trace) {
  Json out = {{"id", s.line.id},
              {"name", s.line.name},
              {"keypoints", polyline_json(s.line.keypoints)},
              {"keypoint_count", s.line.keypoint_count_target}};
  if (with_trace) {
    out["trace"] = polyline_json(s.trace);
  } else {
    out["trace_points"] = s.trace.size();
  }
  return out;
}

SessionSeries series_from_json(const Json& j) {
  if (!j.is_object()) bad("series must be an object");
  SessionSeries s;
  if (j.contains("id")) s.line.id = string(j.at("id"), "id");
  if (j.contains("name")) s.line.name = string(j.at("name"), "name");
  if (j.contains("keypoints")) s.line.keypoints = polyline_from(j.at("keypoints"), "keypoints");
  if (j.contains("trace")) s.trace = polyline_from(j.at("trace"), "trace");
  if (j.contains("keypoint_count")) {
    s.line.keypoint_count_target = static_cast<int>(count(j.at("keypoint_count"), "keypoint_count"));
  } else {
    // Unset: sampled traces pick the default count, explicit keypoints keep theirs.
    s.line.keypoint_count_target = static_cast<int>(s.line.keypoints.size());
  }
  return s;
}

Json to_json(const Command& command) {
  return std::visit(
      overloaded{
          [](const cmd::SetCalibrationPoint& c) {
            Json j = {{"op", "set_calibration_point"},
                      {"axis", axis_name(c.axis)},
                      {"anchor", c.anchor},
                      {"pixel", point_json(c.pixel)},
                      {"value", c.value}};
            if (c.precision) j["precision"] = precision_name(*c.precision);
            return j;
          },
          [](const cmd::SetAxisKind& c) {
            return Json{{"op", "set_axis_kind"}, {"axis", axis_name(c.axis)}, {"kind", std::string(to_string(c.kind))}};
          },
          [](const cmd::SetCalibration& c) {
            return Json{{"op", "set_calibration"},
                        {"calibration", c.calibration ? to_json(*c.calibration) : Json(nullptr)}};
          },
          [](const cmd::AddPoint& c) {
            Json j = {{"op", "add_point"}, {"series", series_ref_json(c.series)}, {"point", point_json(c.point)}};
            if (c.index) j["index"] = *c.index;
            return j;
          },
          [](const cmd::MovePoint& c) {
            Json j = {{"op", "move_point"},
                      {"series", series_ref_json(c.series)},
                      {"index", c.index},
                      {"to", point_json(c.to)}};
            if (c.from) j["from"] = point_json(*c.from);
            return j;
          },
          [](const cmd::DeletePoint& c) {
            Json j = {{"op", "delete_point"}, {"series", series_ref_json(c.series)}, {"index", c.index}};
            if (c.point) j["point"] = point_json(*c.point);
            return j;
          },
          [](const cmd::SetTextField& c) {
            return Json{{"op", "set_text_field"},
                        {"field", std::string(to_string(c.field))},
                        {"value", c.values},
                        {"provenance", std::string(to_string(c.provenance))}};
          },
          [](const cmd::AddSeries& c) {
            Json j = {{"op", "add_series"}, {"series", to_json(c.series, true)}};
            if (c.index) j["index"] = *c.index;
            return j;
          },
          [](const cmd::RemoveSeries& c) {
            return Json{{"op", "remove_series"}, {"series", series_ref_json(c.series)}};
          },
          [](const cmd::ResampleSeries& c) {
            return Json{{"op", "resample_series"}, {"series", series_ref_json(c.series)}, {"count", c.count}};
          },
          [](const cmd::SetKeypoints& c) {
            return Json{{"op", "set_keypoints"},
                        {"series", series_ref_json(c.series)},
                        {"keypoints", polyline_json(c.keypoints)},
                        {"count", c.count_target}};
          },
          [](const cmd::RenameSeries& c) {
            return Json{{"op", "rename_series"}, {"series", series_ref_json(c.series)}, {"name", c.name}};
          },
          [](const cmd::SetRenderOptions& c) {
            return Json{{"op", "set_render_options"}, {"options", to_json(c.options)}};
          },
      },
      command);
}

Command command_from_json(const Json& j, const RenderOptions& current_options) {
  try {
    const std::string op = string(field(j, "op"), "op");
    if (op == "set_calibration_point") {
      cmd::SetCalibrationPoint c;
      c.axis = axis_from(field(j, "axis"));
      c.anchor = static_cast<int>(count(field(j, "anchor"), "anchor"));
      c.pixel = point_from(field(j, "pixel"), "pixel");
      const Json& v = field(j, "value");
      if (v.is_string()) {
        // Strings are ISO-8601 times; they also fix the export precision.
        try {
          const auto t = parse_iso8601(v.get<std::string>());
          c.value = t.epoch_seconds;
          c.precision = t.precision;
        } catch (const Error& e) {
          bad(e.what());
        }
      } else {
        c.value = number(v, "value");
      }
      if (j.contains("precision")) c.precision = precision_from(j.at("precision"));
      return c;
    }
    if (op == "set_axis_kind") {
      cmd::SetAxisKind c;
      c.axis = axis_from(field(j, "axis"));
      try {
        c.kind = parse_scale_kind(string(field(j, "kind"), "kind"));
      } catch (const Error& e) {
        bad(e.what());
      }
      return c;
    }
    if (op == "set_calibration") {
      const Json& c = field(j, "calibration");
      if (c.is_null()) return cmd::SetCalibration{};
      return cmd::SetCalibration{calibration_from_json(c)};
    }
    if (op == "add_point") {
      cmd::AddPoint c;
      c.series = series_ref_from(field(j, "series"));
      c.point = point_from(field(j, "point"), "point");
      if (j.contains("index")) c.index = count(j.at("index"), "index");
      return c;
    }
    if (op == "move_point") {
      cmd::MovePoint c;
      c.series = series_ref_from(field(j, "series"));
      c.index = count(field(j, "index"), "index");
      c.to = point_from(field(j, "to"), "to");
      if (j.contains("from")) c.from = point_from(j.at("from"), "from");
      return c;
    }
    if (op == "delete_point") {
      cmd::DeletePoint c;
      c.series = series_ref_from(field(j, "series"));
      c.index = count(field(j, "index"), "index");
      if (j.contains("point")) c.point = point_from(j.at("point"), "point");
      return c;
    }
    if (op == "set_text_field") {
      cmd::SetTextField c;
      try {
        c.field = parse_text_field_kind(string(field(j, "field"), "field"));
        if (j.contains("provenance")) c.provenance = parse_provenance(string(j.at("provenance"), "provenance"));
      } catch (const Error& e) {
        bad(e.what());
      }
      c.values = text_values(field(j, "value"));
      return c;
    }
    if (op == "add_series") {
      cmd::AddSeries c;
      c.series = series_from_json(field(j, "series"));
      if (j.contains("index")) c.index = count(j.at("index"), "index");
      return c;
    }
    if (op == "remove_series") return cmd::RemoveSeries{series_ref_from(field(j, "series"))};
    if (op == "resample_series") {
      return cmd::ResampleSeries{series_ref_from(field(j, "series")),
                                 static_cast<int>(count(field(j, "count"), "count"))};
    }
    if (op == "set_keypoints") {
      cmd::SetKeypoints c;
      c.series = series_ref_from(field(j, "series"));
      c.keypoints = polyline_from(field(j, "keypoints"), "keypoints");
      c.count_target = j.contains("count") ? static_cast<int>(count(j.at("count"), "count"))
                                           : static_cast<int>(c.keypoints.size());
      return c;
    }
    if (op == "rename_series") {
      return cmd::RenameSeries{series_ref_from(field(j, "series")), string(field(j, "name"), "name")};
    }
    if (op == "set_render_options") {
      return cmd::SetRenderOptions{render_options_from_json(field(j, "options"), current_options)};
    }
    bad("unknown op '" + op + "'");
  } catch (const Json::exception& e) {
    bad(std::string("malformed command: ") + e.what());
  }
}

std::vector<Command> parse_patch(const Json& body, const RenderOptions& current_options) {
  const Json* ops = &body;
  if (body.is_object() && body.contains("ops")) ops = &body.at("ops");
  std::vector<Command> out;
  if (ops->is_array()) {
    for (const auto& op : *ops) out.push_back(command_from_json(op, current_options));
  } else if (ops->is_object()) {
    out.push_back(command_from_json(*ops, current_options));
  } else {
    bad("patch must be an op object or a list of ops");
  }
  if (out.empty()) bad("patch has no ops");
  return out;
}

Json session_state_json(const ChartSession& s) {
  Json out;
  out["version"] = s.version;
  out["consent"] = s.consent;
  if (s.image) {
    out["image"] = {{"width", s.image->width()},
                    {"height", s.image->height()},
                    {"fingerprint", image_fingerprint(*s.image)}};
  }
  out["calibration"] = s.calibration ? to_json(*s.calibration) : Json(nullptr);
  Json violations = Json::array();
  if (s.calibration) {
    for (const auto& v : validate_calibration(*s.calibration)) {
      violations.push_back({{"axis", axis_name(v.axis)}, {"rule", v.rule}});
    }
  }
  out["calibration_violations"] = violations;
  Json series = Json::array();
  for (const auto& entry : s.series) series.push_back(to_json(entry, false));
  out["series"] = series;
  out["metadata"] = to_json(s.metadata);
  out["options"] = to_json(s.options);
  out["history"] = {{"undo", s.history.undo.size()}, {"redo", s.history.redo.size()}};
  const auto report = completeness(s);
  out["completeness"] = {{"missing", report.missing}, {"warnings", report.warnings}};
  return out;
}

Json session_to_json(const ChartSession& s) {
  Json out;
  out["format"] = 1;
  out["token"] = s.token;
  out["version"] = s.version;
  out["consent"] = s.consent;
  out["calibration"] = s.calibration ? to_json(*s.calibration) : Json(nullptr);
  Json series = Json::array();
  for (const auto& entry : s.series) series.push_back(to_json(entry, true));
  out["series"] = series;
  out["metadata"] = to_json(s.metadata);
  out["options"] = to_json(s.options);
  out["history"] = {{"depth", s.history.depth},
                    {"undo", history_json(s.history.undo)},
                    {"redo", history_json(s.history.redo)}};
  return out;
}

ChartSession session_from_json(const Json& j, std::shared_ptr<const RasterImage> image,
                               std::shared_ptr<const std::vector<std::uint8_t>> image_bytes) {
  try {
    if (j.value("format", 0) != 1) throw Error(ErrorCode::Format, "unknown session format");
    ChartSession s;
    s.image = std::move(image);
    s.image_bytes = std::move(image_bytes);
    s.token = j.at("token").get<std::string>();
    s.version = j.at("version").get<std::uint64_t>();
    s.consent = j.at("consent").get<bool>();
    if (!j.at("calibration").is_null()) s.calibration = calibration_from_json(j.at("calibration"));
    for (const auto& e : j.at("series")) {
      SessionSeries series = series_from_json(e);
      series.line.keypoint_count_target = e.at("keypoint_count").get<int>();
      s.series.push_back(std::move(series));
    }
    for (const auto& [key, slot] : j.at("metadata").items()) {
      const TextFieldKind kind = parse_text_field_kind(key);
      s.metadata.set(kind, slot.at("values").get<std::vector<std::string>>(),
                     parse_provenance(slot.at("provenance").get<std::string>()));
    }
    s.options = render_options_from_json(j.at("options"));
    const Json& h = j.at("history");
    s.history.depth = h.at("depth").get<std::size_t>();
    s.history.undo = history_from(h.at("undo"));
    s.history.redo = history_from(h.at("redo"));
    return s;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Format, std::string("corrupt session file: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Format) throw;
    throw Error(ErrorCode::Format, std::string("corrupt session file: ") + e.what());
  }
}

}  // namespace tactiplot
