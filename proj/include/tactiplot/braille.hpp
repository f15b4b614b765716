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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tactiplot {

// Uncontracted (Grade 1) English Braille as Unicode U+2800..U+28FF, UTF-8
// encoded. Accepts ASCII letters, digits, space and . , - : % ( ) /.
// Capitals take the capital indicator per letter; each maximal digit run
// takes one number sign. Throws Error(UnsupportedCharacter).
std::string to_braille_grade1(std::string_view text);

// Drops characters to_braille_grade1 rejects, reporting whether any were.
std::string braille_safe(std::string_view text, bool* dropped = nullptr);

std::vector<char32_t> decode_utf8(std::string_view text);
std::string encode_utf8(char32_t cp);

inline bool is_braille_cell(char32_t cp) { return cp >= 0x2800 && cp <= 0x28FF; }

// Number of cells (code points) in a Braille string.
std::size_t braille_cell_count(std::string_view braille_utf8);

}  // namespace tactiplot
