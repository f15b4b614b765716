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


#include "tactiplot/error.hpp"

namespace tactiplot {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::Format: return "format";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::Degenerate: return "degenerate-input";
    case ErrorCode::EmptyInput: return "empty-input";
    case ErrorCode::InvalidEdit: return "invalid-edit";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::InvalidCalibration: return "invalid-calibration";
    case ErrorCode::UnsupportedCharacter: return "unsupported-character";
    case ErrorCode::IncompleteSession: return "incomplete-session";
    case ErrorCode::NotFound: return "not-found";
    case ErrorCode::PayloadTooLarge: return "payload-too-large";
    case ErrorCode::UnsupportedMedia: return "unsupported-media";
    case ErrorCode::AdapterUnavailable: return "adapter-unavailable";
    case ErrorCode::InvalidCommand: return "invalid-command";
  }
  return "unknown";
}

}  // namespace tactiplot
