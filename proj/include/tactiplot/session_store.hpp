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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stop_token>
#include <string>

#include "tactiplot/ocr.hpp"
#include "tactiplot/session.hpp"
#include "tactiplot/session_json.hpp"

namespace tactiplot {

inline constexpr std::size_t kMaxUploadBytes = 20u * 1024u * 1024u;
// Trace masks covering more of the image than this are refused.
inline constexpr double kBackgroundCoverage = 0.5;

struct StoreConfig {
  // Empty: nothing is persisted even with consent.
  std::filesystem::path data_dir;
  std::size_t max_upload_bytes = kMaxUploadBytes;
  std::shared_ptr<OcrAdapter> ocr;
};

struct PatchResult {
  bool conflict = false;
  std::uint64_t version = 0;
  Json state;  // current state, set on conflict
};

struct HistoryResult {
  HistoryStatus status = HistoryStatus::Applied;
  std::uint64_t version = 0;
};

struct OcrResult {
  // "ok", or "degraded" when the adapter is unavailable.
  std::string status;
  std::string message;
  std::vector<TextBox> boxes;
};

struct ExportResult {
  std::string body;
  std::string content_type;
  CompletenessReport report;
  std::vector<std::string> warnings;
};

// Export kinds: svg-digital, svg-print, csv, description.
ExportResult export_document(const ChartSession& session, std::string_view kind);

// Random 128-bit token, base64url without padding (22 characters).
std::string new_session_token();

// Tokenized sessions. Mutations on one session are serialized, reads run
// concurrently, and distinct sessions never contend.
class SessionStore {
 public:
  explicit SessionStore(StoreConfig config);

  struct Created {
    std::string token;
    Json state;
  };
  // Throws PayloadTooLarge, UnsupportedMedia or Format.
  Created create(std::span<const std::uint8_t> image_bytes, bool consent);

  // Unknown tokens throw Error(NotFound) from every accessor below.
  Json state(const std::string& token) const;
  ChartSession snapshot(const std::string& token) const;

  // Applies iff base_version matches (or is absent). Invalid commands throw
  // Error(InvalidCommand / InvalidEdit / ...) with the session untouched.
  PatchResult patch(const std::string& token, const std::vector<Command>& commands,
                    std::optional<std::uint64_t> base_version);
  // Parses the body first; see parse_patch for its shape. Reads
  // "base_version" from an object body.
  PatchResult patch_json(const std::string& token, const Json& body);

  HistoryResult undo(const std::string& token);
  HistoryResult redo(const std::string& token);

  // A series proposal traced from `seed`; not committed.
  Json trace(const std::string& token, PixelPoint seed, double tolerance) const;
  OcrResult ocr(const std::string& token, std::stop_token stop = {}) const;
  ExportResult export_as(const std::string& token, std::string_view kind) const;

  std::size_t size() const;
  // Sessions found on disk at construction.
  std::size_t loaded() const { return loaded_; }

 private:
  struct Slot {
    mutable std::shared_mutex mutex;
    ChartSession session;
  };

  std::shared_ptr<Slot> find(const std::string& token) const;
  void persist(const ChartSession& session) const;
  void load_all();

  StoreConfig config_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::size_t loaded_ = 0;
};

}  // namespace tactiplot
