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

#include <optional>
#include <string>
#include <string_view>

namespace tactiplot {

// Rounds to `digits` significant digits and prints plain decimal notation
// (no exponent, no trailing zeros): format_significant(1234.5, 4) == "1235",
// format_significant(0.000123456, 3) == "0.000123".
std::string format_significant(double value, int digits);

// Plain or scientific decimal; nullopt unless the whole text is a number.
std::optional<double> parse_number(std::string_view text);

}  // namespace tactiplot
