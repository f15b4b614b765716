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


#include "tactiplot/csv.hpp"

#include "tactiplot/error.hpp"

namespace tactiplot::csv {

std::string quote_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += quote_field(fields[i]);
  }
  out += '\n';
  return out;
}

bool Reader::at_record_end() const {
  return at_end() || text_[pos_] == '\n' || (text_[pos_] == '\r' && pos_ + 1 < text_.size() &&
                                             text_[pos_ + 1] == '\n');
}

std::string_view Reader::peek_rest_of_line() const {
  const auto end = text_.find('\n', pos_);
  return text_.substr(pos_, end == std::string_view::npos ? std::string_view::npos : end - pos_);
}

bool Reader::consume(std::string_view literal) {
  if (text_.substr(pos_, literal.size()) != literal) return false;
  pos_ += literal.size();
  return true;
}

std::string Reader::read_field() {
  std::string out;
  if (!at_end() && text_[pos_] == '"') {
    ++pos_;
    for (;;) {
      if (at_end()) throw Error(ErrorCode::Format, "unterminated quoted CSV field");
      const char c = text_[pos_++];
      if (c == '"') {
        if (!at_end() && text_[pos_] == '"') {
          out += '"';
          ++pos_;
        } else {
          break;
        }
      } else {
        out += c;
      }
    }
    if (!at_end() && text_[pos_] != ',' && !at_record_end()) {
      throw Error(ErrorCode::Format, "unexpected character after quoted CSV field");
    }
    return out;
  }
  while (!at_end() && text_[pos_] != ',' && !at_record_end()) {
    if (text_[pos_] == '"') throw Error(ErrorCode::Format, "stray quote in unquoted CSV field");
    out += text_[pos_++];
  }
  return out;
}

void Reader::skip_record_end() {
  if (consume("\r\n")) return;
  consume("\n");
}

std::vector<std::string> Reader::read_record() {
  std::vector<std::string> fields;
  for (;;) {
    fields.push_back(read_field());
    if (!at_end() && text_[pos_] == ',') {
      ++pos_;
      continue;
    }
    break;
  }
  skip_record_end();
  return fields;
}

std::vector<std::vector<std::string>> parse(std::string_view text) {
  Reader reader(text);
  std::vector<std::vector<std::string>> rows;
  while (!reader.at_end()) rows.push_back(reader.read_record());
  return rows;
}

}  // namespace tactiplot::csv
