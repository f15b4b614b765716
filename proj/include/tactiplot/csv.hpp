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

#include <string>
#include <string_view>
#include <vector>

namespace tactiplot::csv {

// RFC 4180: quote when the field holds a comma, quote, CR or LF; embedded
// quotes are doubled.
std::string quote_field(std::string_view field);

std::string format_row(const std::vector<std::string>& fields);

// Cursor over CSV text. Accepts LF or CRLF record ends.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  bool at_record_end() const;
  std::string_view peek_rest_of_line() const;
  bool consume(std::string_view literal);

  // One field; stops before the delimiter or record end.
  std::string read_field();
  // Fields up to and including the record terminator.
  std::vector<std::string> read_record();
  void skip_record_end();

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::vector<std::string>> parse(std::string_view text);

}  // namespace tactiplot::csv
