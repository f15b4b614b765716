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


#include <filesystem>
#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "tactiplot/error.hpp"
#include "tactiplot/session_store.hpp"

using namespace tactiplot;

namespace {

std::vector<std::uint8_t> chart_png(std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  return testing::png_bytes(testing::random_chart(rng).image);
}

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

class ThrowingOcr final : public OcrAdapter {
 public:
  std::vector<TextBox> recognize(const RasterImage&, std::stop_token) override {
    throw Error(ErrorCode::AdapterUnavailable, "engine offline");
  }
};

}  // namespace

TEST_CASE("tokens are 22 URL-safe characters and distinct") {
  std::set<std::string> seen;
  for (int i = 0; i < 500; ++i) {
    const auto t = new_session_token();
    CHECK(t.size() == 22);
    CHECK(t.find_first_not_of("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_") ==
          std::string::npos);
    seen.insert(t);
  }
  CHECK(seen.size() == 500);
}

TEST_CASE("upload checks") {
  SessionStore store({});
  const auto created = store.create(chart_png(), false);
  CHECK(created.state["version"] == 0);
  CHECK(created.state["calibration"]["x"]["p1"]["pixel"].size() == 2);

  std::vector<std::uint8_t> huge(25u * 1024u * 1024u, 0x89);
  CHECK(code_of([&] { store.create(huge, false); }) == ErrorCode::PayloadTooLarge);
  const std::string text = "just some text\n";
  CHECK(code_of([&] { store.create({reinterpret_cast<const std::uint8_t*>(text.data()), text.size()}, false); }) ==
        ErrorCode::UnsupportedMedia);
  CHECK(code_of([&] { store.state("nope-nope-nope-nope"); }) == ErrorCode::NotFound);
  CHECK(code_of([&] { store.undo("nope-nope-nope-nope"); }) == ErrorCode::NotFound);
}

TEST_CASE("optimistic versioning") {
  SessionStore store({});
  const auto token = store.create(chart_png(), false).token;
  const auto rename = [](const char* title) {
    return std::vector<Command>{cmd::SetTextField{TextFieldKind::PlotTitle, {title}, Provenance::Manual}};
  };
  auto first = store.patch(token, rename("a"), 0);
  CHECK_FALSE(first.conflict);
  CHECK(first.version == 1);
  auto second = store.patch(token, rename("b"), 0);
  CHECK(second.conflict);
  CHECK(second.version == 1);
  CHECK(second.state["metadata"].dump().find("\"a\"") != std::string::npos);
  CHECK(store.patch(token, rename("c"), std::nullopt).version == 2);

  CHECK_THROWS_AS(store.patch(token, {cmd::RemoveSeries{std::size_t{4}}}, 2), Error);
  CHECK(store.state(token)["version"] == 2);
}

TEST_CASE("patch_json reads base_version") {
  SessionStore store({});
  const auto token = store.create(chart_png(), false).token;
  const Json body = Json::parse(R"({"base_version": 0, "ops": [{"op": "set_text_field", "field": "plot_title", "value": "T"}]})");
  CHECK(store.patch_json(token, body).version == 1);
  CHECK(store.patch_json(token, body).conflict);
}

TEST_CASE("undo and redo through the store") {
  SessionStore store({});
  const auto token = store.create(chart_png(), false).token;
  CHECK(store.undo(token).status == HistoryStatus::EmptyHistory);
  store.patch(token, {cmd::SetTextField{TextFieldKind::PlotTitle, {"T"}, Provenance::Manual}}, std::nullopt);
  const auto u = store.undo(token);
  CHECK(u.status == HistoryStatus::Applied);
  CHECK(u.version == 2);
  CHECK(store.redo(token).version == 3);
  CHECK(store.snapshot(token).metadata.text(TextFieldKind::PlotTitle) == "T");
}

TEST_CASE("trace proposals") {
  std::mt19937_64 rng(5);
  const auto chart = testing::random_chart(rng);
  SessionStore store({});
  const auto token = store.create(testing::png_bytes(chart.image), false).token;
  const Json proposal = store.trace(token, chart.seed, kDefaultColorTolerance);
  CHECK(proposal["proposal"]["op"] == "add_series");
  const auto keypoints = proposal["proposal"]["series"]["keypoints"];
  CHECK(keypoints.size() >= 2);
  for (const auto& p : keypoints) {
    const double x = p[0].get<double>(), y = p[1].get<double>();
    CHECK(std::abs(y - testing::interpolate_y(chart.truth, x)) <= 1.0);
  }
  // Proposals are not committed.
  CHECK(store.state(token)["series"].empty());
  // Accepting goes through a patch.
  CHECK(store.patch_json(token, proposal["proposal"]).version == 1);

  CHECK(code_of([&] { store.trace(token, {-4, 2}, 10.0); }) == ErrorCode::InvalidInput);

  RasterImage plain(200, 100);
  for (int x = 20; x < 180; ++x) plain.set(x, 50, {0, 0, 0, 255});
  const auto t2 = store.create(testing::png_bytes(plain), false).token;
  try {
    store.trace(t2, {5, 5}, 0.0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("likely background") != std::string::npos);
  }
}

TEST_CASE("OCR results and the degraded path") {
  SessionStore plain({});
  const auto token = plain.create(chart_png(), false).token;
  const auto none = plain.ocr(token);
  CHECK(none.status == "degraded");
  CHECK(none.boxes.empty());

  StoreConfig config;
  config.ocr = std::make_shared<StubOcrAdapter>(std::vector<TextBox>{
      {{10, 10, 40, 12}, "Sales", 0.9}, {{100, 560, 20, 10}, "0", 0.3}, {{700, 560, 20, 10}, "10", 0.8}});
  SessionStore stubbed(config);
  const auto t2 = stubbed.create(chart_png(), false).token;
  const auto got = stubbed.ocr(t2);
  CHECK(got.status == "ok");
  REQUIRE(got.boxes.size() == 3);
  CHECK(got.boxes[1].content == "0");

  config.ocr = std::make_shared<ThrowingOcr>();
  SessionStore offline(config);
  const auto t3 = offline.create(chart_png(), false).token;
  CHECK(offline.ocr(t3).status == "degraded");
  // Still editable.
  CHECK(offline.patch(t3, {cmd::SetTextField{TextFieldKind::PlotTitle, {"T"}, Provenance::Manual}}, 0).version == 1);
}

TEST_CASE("stub OCR keyed by image fingerprint") {
  RasterImage a(10, 10), b(10, 10, Rgba{0, 0, 0, 255});
  auto stub = StubOcrAdapter::from_json(R"({")" + image_fingerprint(a) +
                                        R"(": [{"x": 1, "y": 2, "w": 3, "h": 4, "text": "Hi", "confidence": 0.7}]})");
  CHECK(stub.recognize(a, {}).size() == 1);
  CHECK(stub.recognize(b, {}).empty());
}

TEST_CASE("exports enforce completeness") {
  SessionStore store({});
  const auto token = store.create(chart_png(), false).token;
  try {
    store.export_as(token, "svg-print");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompleteSession);
    CHECK(std::string(e.what()).find("series") != std::string::npos);
  }
  const auto doc = export_document(testing::sales_session(), "description");
  CHECK(doc.content_type.find("text/plain") == 0);
  CHECK(doc.body.rfind("Line chart titled 'Sales'.", 0) == 0);
  CHECK(export_document(testing::sales_session(), "csv").content_type.find("text/csv") == 0);
  CHECK(code_of([&] { export_document(testing::sales_session(), "pdf"); }) == ErrorCode::InvalidInput);
}

TEST_CASE("persistence requires consent and survives restart") {
  const auto dir = testing::temp_dir("tactiplot-store");
  std::string kept, dropped;
  {
    StoreConfig config;
    config.data_dir = dir;
    SessionStore store(config);
    kept = store.create(chart_png(1), true).token;
    dropped = store.create(chart_png(2), false).token;
    store.patch(kept, {cmd::SetTextField{TextFieldKind::PlotTitle, {"Kept"}, Provenance::Manual}}, 0);
  }
  CHECK(std::filesystem::exists(std::filesystem::path(dir) / (kept + ".json")));
  CHECK_FALSE(std::filesystem::exists(std::filesystem::path(dir) / (dropped + ".json")));
  StoreConfig config;
  config.data_dir = dir;
  SessionStore reopened(config);
  CHECK(reopened.loaded() == 1);
  CHECK(reopened.state(kept)["version"] == 1);
  CHECK(reopened.snapshot(kept).metadata.text(TextFieldKind::PlotTitle) == "Kept");
  CHECK(reopened.undo(kept).status == HistoryStatus::Applied);
  std::filesystem::remove_all(dir);
}
