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


#include "tactiplot/session_store.hpp"

#include <array>
#include <fstream>
#include <random>
#include <sstream>

#include "tactiplot/description.hpp"
#include "tactiplot/error.hpp"
#include "tactiplot/rendering.hpp"

namespace tactiplot {

namespace fs = std::filesystem;

std::string new_session_token() {
  static constexpr char kAlphabet[] =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";
  std::random_device rd;
  std::array<std::uint8_t, 16> bytes{};
  for (std::size_t i = 0; i < bytes.size(); i += 4) {
    const std::uint32_t r = rd();
    for (std::size_t k = 0; k < 4; ++k) bytes[i + k] = static_cast<std::uint8_t>(r >> (8 * k));
  }
  std::string out;
  std::uint32_t acc = 0;
  int bits = 0;
  for (std::uint8_t b : bytes) {
    acc = (acc << 8) | b;
    bits += 8;
    while (bits >= 6) {
      bits -= 6;
      out += kAlphabet[(acc >> bits) & 0x3F];
    }
  }
  if (bits > 0) out += kAlphabet[(acc << (6 - bits)) & 0x3F];
  return out;
}

ExportResult export_document(const ChartSession& session, std::string_view kind) {
  ExportResult out;
  out.report = completeness(session);
  require_complete(session);
  if (kind == "svg-digital" || kind == "svg-print") {
    auto r = render_svg(session, kind == "svg-print" ? RenderMode::PrintAccessible
                                                     : RenderMode::DigitalAccessible);
    out.body = std::move(r.svg);
    out.warnings = std::move(r.warnings);
    out.content_type = "image/svg+xml";
  } else if (kind == "csv") {
    out.body = export_csv(session);
    out.content_type = "text/csv; charset=utf-8";
  } else if (kind == "description") {
    out.body = generate_description(session);
    out.content_type = "text/plain; charset=utf-8";
  } else {
    throw Error(ErrorCode::InvalidInput,
                "unknown export kind '" + std::string(kind) +
                    "'; expected svg-digital, svg-print, csv or description");
  }
  return out;
}

namespace {

std::vector<std::uint8_t> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Format, "cannot read " + path.filename().string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_atomic(const fs::path& path, std::span<const std::uint8_t> data) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::Format, "cannot write session file");
  }
  fs::rename(tmp, path);
}

void write_atomic(const fs::path& path, const std::string& text) {
  write_atomic(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace

SessionStore::SessionStore(StoreConfig config) : config_(std::move(config)) {
  if (!config_.data_dir.empty()) {
    fs::create_directories(config_.data_dir);
    load_all();
  }
}

void SessionStore::load_all() {
  for (const auto& entry : fs::directory_iterator(config_.data_dir)) {
    if (entry.path().extension() != ".json") continue;
    const fs::path image_path = fs::path(entry.path()).replace_extension(".image");
    if (!fs::exists(image_path)) continue;
    auto bytes = std::make_shared<const std::vector<std::uint8_t>>(read_file(image_path));
    auto image = std::make_shared<const RasterImage>(decode_image(*bytes));
    const auto text = read_file(entry.path());
    const Json doc = Json::parse(text.begin(), text.end());
    auto slot = std::make_shared<Slot>();
    slot->session = session_from_json(doc, std::move(image), std::move(bytes));
    sessions_[slot->session.token] = std::move(slot);
    ++loaded_;
  }
}

void SessionStore::persist(const ChartSession& session) const {
  if (!session.consent || config_.data_dir.empty()) return;
  const fs::path base = config_.data_dir / session.token;
  const fs::path image_path = fs::path(base).replace_extension(".image");
  if (!fs::exists(image_path) && session.image_bytes) write_atomic(image_path, *session.image_bytes);
  write_atomic(fs::path(base).replace_extension(".json"), session_to_json(session).dump(2) + "\n");
}

SessionStore::Created SessionStore::create(std::span<const std::uint8_t> image_bytes, bool consent) {
  if (image_bytes.size() > config_.max_upload_bytes) {
    throw Error(ErrorCode::PayloadTooLarge, "image exceeds " +
                                                std::to_string(config_.max_upload_bytes / (1024 * 1024)) +
                                                " MB");
  }
  if (sniff_format(image_bytes) == ImageFormat::Unknown) {
    throw Error(ErrorCode::UnsupportedMedia, "upload is neither PNG nor JPEG");
  }
  auto bytes = std::make_shared<const std::vector<std::uint8_t>>(image_bytes.begin(), image_bytes.end());
  auto image = std::make_shared<const RasterImage>(decode_image(*bytes));
  auto slot = std::make_shared<Slot>();
  slot->session = make_session(std::move(image), std::move(bytes), consent);
  {
    std::unique_lock lock(mutex_);
    std::string token;
    do {
      token = new_session_token();
    } while (sessions_.contains(token));
    slot->session.token = token;
    sessions_[token] = slot;
  }
  std::unique_lock lock(slot->mutex);
  persist(slot->session);
  return {slot->session.token, session_state_json(slot->session)};
}

std::shared_ptr<SessionStore::Slot> SessionStore::find(const std::string& token) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(token);
  if (it == sessions_.end()) throw Error(ErrorCode::NotFound, "no such session");
  return it->second;
}

Json SessionStore::state(const std::string& token) const {
  auto slot = find(token);
  std::shared_lock lock(slot->mutex);
  return session_state_json(slot->session);
}

ChartSession SessionStore::snapshot(const std::string& token) const {
  auto slot = find(token);
  std::shared_lock lock(slot->mutex);
  return slot->session;
}

PatchResult SessionStore::patch(const std::string& token, const std::vector<Command>& commands,
                                std::optional<std::uint64_t> base_version) {
  auto slot = find(token);
  std::unique_lock lock(slot->mutex);
  ChartSession& s = slot->session;
  if (base_version && *base_version != s.version) {
    return {true, s.version, session_state_json(s)};
  }
  HistoryEntry entry = apply_commands(s, commands);
  commit_mutation(s, std::move(entry));
  persist(s);
  return {false, s.version, {}};
}

PatchResult SessionStore::patch_json(const std::string& token, const Json& body) {
  std::optional<std::uint64_t> base;
  if (body.is_object() && body.contains("base_version")) {
    const Json& b = body.at("base_version");
    if (!b.is_number_unsigned() && !(b.is_number_integer() && b.get<long long>() >= 0)) {
      throw Error(ErrorCode::InvalidCommand, "base_version must be a non-negative integer");
    }
    base = b.get<std::uint64_t>();
  }
  RenderOptions current;
  {
    auto slot = find(token);
    std::shared_lock lock(slot->mutex);
    current = slot->session.options;
  }
  return patch(token, parse_patch(body, current), base);
}

HistoryResult SessionStore::undo(const std::string& token) {
  auto slot = find(token);
  std::unique_lock lock(slot->mutex);
  const auto status = tactiplot::undo(slot->session);
  if (status == HistoryStatus::Applied) persist(slot->session);
  return {status, slot->session.version};
}

HistoryResult SessionStore::redo(const std::string& token) {
  auto slot = find(token);
  std::unique_lock lock(slot->mutex);
  const auto status = tactiplot::redo(slot->session);
  if (status == HistoryStatus::Applied) persist(slot->session);
  return {status, slot->session.version};
}

Json SessionStore::trace(const std::string& token, PixelPoint seed, double tolerance) const {
  std::shared_ptr<const RasterImage> image;
  {
    auto slot = find(token);
    std::shared_lock lock(slot->mutex);
    image = slot->session.image;
  }
  const MaskImage mask = trace_color(*image, seed, tolerance);
  const double coverage = static_cast<double>(mask.count()) /
                          (static_cast<double>(image->width()) * static_cast<double>(image->height()));
  if (coverage > kBackgroundCoverage) {
    std::ostringstream msg;
    msg << "likely background: the trace covers " << static_cast<int>(coverage * 100.0 + 0.5)
        << "% of the image";
    throw Error(ErrorCode::InvalidInput, msg.str());
  }
  SessionSeries proposal;
  proposal.trace = mask_to_polyline(mask);
  if (proposal.trace.size() < 2) {
    throw Error(ErrorCode::Degenerate, "trace spans a single column; widen the tolerance or pick another seed");
  }
  const int n = default_keypoint_count(proposal.trace);
  proposal.line.keypoints = sample_equidistant(proposal.trace, n);
  proposal.line.keypoint_count_target = n;
  return {{"mask_pixels", mask.count()},
          {"coverage", coverage},
          {"proposal", {{"op", "add_series"}, {"series", to_json(proposal, true)}}}};
}

OcrResult SessionStore::ocr(const std::string& token, std::stop_token stop) const {
  std::shared_ptr<const RasterImage> image;
  {
    auto slot = find(token);
    std::shared_lock lock(slot->mutex);
    image = slot->session.image;
  }
  OcrResult out;
  if (!config_.ocr) {
    out.status = "degraded";
    out.message = "no OCR engine configured; enter text manually";
    return out;
  }
  try {
    out.boxes = config_.ocr->recognize(*image, stop);
    out.status = "ok";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AdapterUnavailable) throw;
    out.status = "degraded";
    out.message = e.what();
  }
  return out;
}

ExportResult SessionStore::export_as(const std::string& token, std::string_view kind) const {
  auto slot = find(token);
  std::shared_lock lock(slot->mutex);
  return export_document(slot->session, kind);
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

}  // namespace tactiplot
