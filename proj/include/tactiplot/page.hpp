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

namespace tactiplot {

inline constexpr double kMinStrokeMm = 0.4;
inline constexpr double kMinBrailleClearanceMm = 3.0;
inline constexpr double kBrailleCellWidthMm = 6.0;
inline constexpr double kBrailleCellHeightMm = 10.0;

// Physical page for print output. Defaults to A4 landscape.
struct PageSpec {
  double width_mm = 297.0;
  double height_mm = 210.0;
  double margin_mm = 10.0;
  // Empty space kept around every Braille run.
  double braille_clearance_mm = 4.0;
  double cell_width_mm = kBrailleCellWidthMm;
  double cell_height_mm = kBrailleCellHeightMm;

  friend bool operator==(const PageSpec&, const PageSpec&) = default;
};

}  // namespace tactiplot
