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


#include "tactiplot/ocr.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "tactiplot/error.hpp"

namespace tactiplot {

namespace {

std::vector<TextBox> boxes_from_json(const nlohmann::json& arr) {
  std::vector<TextBox> out;
  for (const auto& b : arr) {
    TextBox box;
    box.bbox = {b.at("x").get<double>(), b.at("y").get<double>(), b.at("w").get<double>(),
                b.at("h").get<double>()};
    box.content = b.at("text").get<std::string>();
    box.confidence = b.value("confidence", 1.0);
    if (!(box.bbox.w > 0 && box.bbox.h > 0) || box.confidence < 0.0 || box.confidence > 1.0) {
      throw Error(ErrorCode::Format, "OCR annotation box has invalid size or confidence");
    }
    out.push_back(std::move(box));
  }
  return out;
}

}  // namespace

StubOcrAdapter StubOcrAdapter::from_json(const std::string& json_text) {
  StubOcrAdapter stub;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    for (const auto& [key, value] : doc.items()) {
      if (key == "*") {
        stub.fallback_ = boxes_from_json(value);
      } else {
        stub.by_image_[key] = boxes_from_json(value);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Format, std::string("OCR annotations: ") + e.what());
  }
  return stub;
}

StubOcrAdapter StubOcrAdapter::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read OCR annotations " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

void StubOcrAdapter::add(const std::string& fingerprint, std::vector<TextBox> boxes) {
  by_image_[fingerprint] = std::move(boxes);
}

std::vector<TextBox> StubOcrAdapter::recognize(const RasterImage& image, std::stop_token stop) {
  if (stop.stop_requested()) throw Error(ErrorCode::AdapterUnavailable, "OCR request cancelled");
  const auto it = by_image_.find(image_fingerprint(image));
  if (it != by_image_.end()) return it->second;
  return fallback_.value_or(std::vector<TextBox>{});
}

std::vector<TextBox> UnavailableOcrAdapter::recognize(const RasterImage&, std::stop_token) {
  throw Error(ErrorCode::AdapterUnavailable, "no OCR engine is configured");
}

}  // namespace tactiplot
