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

#include <memory>
#include <vector>

#include "json.hpp"
#include "tactiplot/session.hpp"

namespace tactiplot {

using Json = nlohmann::json;

Json to_json(const CalibrationSet& calibration);
CalibrationSet calibration_from_json(const Json& j);

Json to_json(const RenderOptions& options);
// Fields missing from `j` keep their value in `base`.
RenderOptions render_options_from_json(const Json& j, const RenderOptions& base = {});

Json to_json(const TextMetadata& metadata);
Json to_json(const SessionSeries& series, bool with_trace);
SessionSeries series_from_json(const Json& j);

// Patch operations. One object per command, keyed by "op":
//   set_calibration_point {axis, anchor, pixel:[x,y], value: number|ISO-8601, precision?}
//   set_axis_kind        {axis, kind}
//   set_calibration      {calibration: object|null}
//   add_point            {series, point:[x,y], index?}
//   move_point           {series, index, to:[x,y], from?}
//   delete_point         {series, index, point?}
//   set_text_field       {field, value: string|[string], provenance?}
//   add_series           {series:{id?, name?, keypoints?, trace?, keypoint_count?}, index?}
//   remove_series        {series}
//   resample_series      {series, count}
//   set_keypoints        {series, keypoints, count?}
//   rename_series        {series, name}
//   set_render_options   {options:{page?:{...}, description_level?}}
// `series` is a position or an id. Throws Error(InvalidCommand).
Command command_from_json(const Json& j, const RenderOptions& current_options = {});
Json to_json(const Command& command);

// Accepts a single op object, an array of them, or {"ops": [...]}.
std::vector<Command> parse_patch(const Json& body, const RenderOptions& current_options = {});

// What clients see: everything but the trace data and history contents.
Json session_state_json(const ChartSession& session);

// Full form written to disk, history included.
Json session_to_json(const ChartSession& session);
ChartSession session_from_json(const Json& j, std::shared_ptr<const RasterImage> image,
                               std::shared_ptr<const std::vector<std::uint8_t>> image_bytes);

}  // namespace tactiplot
