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

#include <filesystem>
#include <map>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "tactiplot/image.hpp"
#include "tactiplot/metadata.hpp"

namespace tactiplot {

// Text recognition backend. Results are suggestions for the operator.
// Implementations throw Error(AdapterUnavailable) when the engine cannot be
// reached or the request was cancelled through `stop`.
class OcrAdapter {
 public:
  virtual ~OcrAdapter() = default;
  virtual std::vector<TextBox> recognize(const RasterImage& image, std::stop_token stop) = 0;
};

// Returns pre-annotated boxes keyed by image_fingerprint(). Sidecar format:
//   {"<fingerprint>": [{"x":..,"y":..,"w":..,"h":..,"text":"..","confidence":..}], "*": [...]}
// "*" applies to images without their own entry.
class StubOcrAdapter final : public OcrAdapter {
 public:
  StubOcrAdapter() = default;
  explicit StubOcrAdapter(std::vector<TextBox> fallback) : fallback_(std::move(fallback)) {}

  static StubOcrAdapter from_json(const std::string& json_text);
  static StubOcrAdapter from_file(const std::filesystem::path& path);

  void add(const std::string& fingerprint, std::vector<TextBox> boxes);

  std::vector<TextBox> recognize(const RasterImage& image, std::stop_token stop) override;

 private:
  std::map<std::string, std::vector<TextBox>> by_image_;
  std::optional<std::vector<TextBox>> fallback_;
};

class UnavailableOcrAdapter final : public OcrAdapter {
 public:
  std::vector<TextBox> recognize(const RasterImage& image, std::stop_token stop) override;
};

}  // namespace tactiplot
