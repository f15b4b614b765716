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


#include "tactiplot/braille.hpp"

#include <array>
#include <initializer_list>

#include "tactiplot/error.hpp"

namespace tactiplot {

namespace {

constexpr char32_t cell(std::initializer_list<int> dots) {
  char32_t bits = 0;
  for (int d : dots) bits |= char32_t{1} << (d - 1);
  return 0x2800 + bits;
}

constexpr std::array<char32_t, 26> kLetters = {
    cell({1}),          cell({1, 2}),       cell({1, 4}),       cell({1, 4, 5}),
    cell({1, 5}),       cell({1, 2, 4}),    cell({1, 2, 4, 5}), cell({1, 2, 5}),
    cell({2, 4}),       cell({2, 4, 5}),    cell({1, 3}),       cell({1, 2, 3}),
    cell({1, 3, 4}),    cell({1, 3, 4, 5}), cell({1, 3, 5}),    cell({1, 2, 3, 4}),
    cell({1, 2, 3, 4, 5}), cell({1, 2, 3, 5}), cell({2, 3, 4}), cell({2, 3, 4, 5}),
    cell({1, 3, 6}),    cell({1, 2, 3, 6}), cell({2, 4, 5, 6}), cell({1, 3, 4, 6}),
    cell({1, 3, 4, 5, 6}), cell({1, 3, 5, 6}),
};

constexpr char32_t kCapital = cell({6});
constexpr char32_t kNumberSign = cell({3, 4, 5, 6});
constexpr char32_t kBlank = 0x2800;

// Punctuation follows Unified English Braille.
std::u32string punctuation(char c) {
  switch (c) {
    case '.': return {cell({2, 5, 6})};
    case ',': return {cell({2})};
    case '-': return {cell({3, 6})};
    case ':': return {cell({2, 5})};
    case '%': return {cell({4, 6}), cell({3, 5, 6})};
    case '(': return {cell({5}), cell({1, 2, 6})};
    case ')': return {cell({5}), cell({3, 4, 5})};
    case '/': return {cell({4, 5, 6}), cell({3, 4})};
    default: return {};
  }
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

std::vector<char32_t> decode_utf8(std::string_view text) {
  std::vector<char32_t> out;
  for (std::size_t i = 0; i < text.size();) {
    const auto b = static_cast<unsigned char>(text[i]);
    int extra = 0;
    char32_t cp = 0;
    if (b < 0x80) {
      cp = b;
    } else if ((b & 0xE0) == 0xC0) {
      cp = b & 0x1F;
      extra = 1;
    } else if ((b & 0xF0) == 0xE0) {
      cp = b & 0x0F;
      extra = 2;
    } else if ((b & 0xF8) == 0xF0) {
      cp = b & 0x07;
      extra = 3;
    } else {
      throw Error(ErrorCode::Format, "invalid UTF-8 lead byte");
    }
    for (int k = 1; k <= extra; ++k) {
      if (i + k >= text.size()) throw Error(ErrorCode::Format, "truncated UTF-8 sequence");
      const auto c = static_cast<unsigned char>(text[i + k]);
      if ((c & 0xC0) != 0x80) throw Error(ErrorCode::Format, "invalid UTF-8 continuation byte");
      cp = (cp << 6) | (c & 0x3F);
    }
    out.push_back(cp);
    i += 1 + extra;
  }
  return out;
}

std::string to_braille_grade1(std::string_view text) {
  std::u32string cells;
  bool in_number = false;
  for (char c : text) {
    if (is_digit(c)) {
      if (!in_number) cells += kNumberSign;
      in_number = true;
      // 1..9 -> a..i, 0 -> j
      cells += kLetters[c == '0' ? 9 : c - '1'];
      continue;
    }
    in_number = false;
    if (c >= 'a' && c <= 'z') {
      cells += kLetters[c - 'a'];
    } else if (c >= 'A' && c <= 'Z') {
      cells += kCapital;
      cells += kLetters[c - 'A'];
    } else if (c == ' ') {
      cells += kBlank;
    } else if (auto p = punctuation(c); !p.empty()) {
      cells += p;
    } else {
      const auto uc = static_cast<unsigned char>(c);
      std::string shown = uc < 0x80 ? std::string(1, c) : "byte 0x" + [&] {
        const char* hex = "0123456789abcdef";
        return std::string{hex[uc >> 4], hex[uc & 15]};
      }();
      throw Error(ErrorCode::UnsupportedCharacter,
                  "character '" + shown + "' has no Grade 1 Braille mapping");
    }
  }
  std::string out;
  for (char32_t cp : cells) out += encode_utf8(cp);
  return out;
}

std::string braille_safe(std::string_view text, bool* dropped) {
  std::string kept;
  bool any = false;
  for (char c : text) {
    const bool ok = is_digit(c) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == ' ' ||
                    !punctuation(c).empty();
    if (ok) {
      kept += c;
    } else {
      any = true;
    }
  }
  if (dropped) *dropped = any;
  return to_braille_grade1(kept);
}

std::size_t braille_cell_count(std::string_view braille_utf8) {
  return decode_utf8(braille_utf8).size();
}

}  // namespace tactiplot
