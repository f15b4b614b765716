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


// Command-line front end: headless conversion, the HTTP service, and the
// print-rule checker.

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tactiplot/description.hpp"
#include "tactiplot/error.hpp"
#include "tactiplot/http_service.hpp"
#include "tactiplot/rendering.hpp"
#include "tactiplot/session_json.hpp"
#include "tactiplot/session_store.hpp"

namespace fs = std::filesystem;
using namespace tactiplot;

namespace {

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path.string());
}

Json read_json(const fs::path& path) {
  try {
    return Json::parse(read_text(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Format, path.filename().string() + ": " + e.what());
  }
}

PixelPoint parse_seed(const std::string& text) {
  const auto comma = text.find(',');
  if (comma != std::string::npos) {
    try {
      const double x = std::stod(text.substr(0, comma));
      const double y = std::stod(text.substr(comma + 1));
      return {x, y};
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorCode::InvalidInput, "seed must look like X,Y: '" + text + "'");
}

struct ConvertOptions {
  fs::path image;
  fs::path calibration;
  std::vector<std::string> seeds;
  std::vector<fs::path> polylines;
  std::vector<std::string> names;
  double tolerance = kDefaultColorTolerance;
  int points = 0;
  fs::path metadata;
  fs::path config;
  fs::path ops;
  fs::path out_dir = ".";
  std::string mode = "all";
};

int convert(const ConvertOptions& o) {
  const std::string bytes = read_text(o.image);
  const std::span<const std::uint8_t> data(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size());
  auto image = std::make_shared<const RasterImage>(decode_image(data));
  ChartSession session = make_session(image, std::make_shared<const std::vector<std::uint8_t>>(data.begin(), data.end()), false);

  std::vector<Command> commands;
  commands.push_back(cmd::SetCalibration{calibration_from_json(read_json(o.calibration))});
  if (!o.config.empty()) {
    const Json cfg = read_json(o.config);
    RenderOptions options = render_options_from_json(cfg, session.options);
    if (cfg.contains("description") && cfg["description"].contains("level")) {
      options.description_level = cfg["description"]["level"].get<int>();
    }
    commands.push_back(cmd::SetRenderOptions{options});
  }
  if (!o.metadata.empty()) {
    const Json fields = read_json(o.metadata);
    for (const auto& [key, value] : fields.items()) {
      cmd::SetTextField field;
      field.field = parse_text_field_kind(key);
      if (value.is_array()) {
        field.values = value.get<std::vector<std::string>>();
      } else if (!value.get<std::string>().empty()) {
        field.values = {value.get<std::string>()};
      }
      commands.push_back(field);
    }
  }

  std::size_t named = 0;
  auto next_name = [&]() -> std::string {
    if (named < o.names.size()) return o.names[named++];
    ++named;
    return "Line " + std::to_string(named);
  };
  for (const auto& seed_text : o.seeds) {
    const MaskImage mask = trace_color(*image, parse_seed(seed_text), o.tolerance);
    const double coverage = static_cast<double>(mask.count()) / (double(image->width()) * image->height());
    if (coverage > kBackgroundCoverage) {
      throw Error(ErrorCode::InvalidInput, "likely background: trace from " + seed_text + " covers most of the image");
    }
    cmd::AddSeries add;
    add.series.trace = mask_to_polyline(mask);
    add.series.line.name = next_name();
    add.series.line.keypoint_count_target = o.points >= 2 ? o.points : 0;
    commands.push_back(add);
  }
  for (const auto& path : o.polylines) {
    cmd::AddSeries add;
    add.series.trace = import_polyline(read_text(path));
    add.series.line.name = next_name();
    add.series.line.keypoint_count_target = o.points >= 2 ? o.points : 0;
    commands.push_back(add);
  }
  if (!o.ops.empty()) {
    const auto extra = parse_patch(read_json(o.ops), session.options);
    commands.insert(commands.end(), extra.begin(), extra.end());
  }
  commit_mutation(session, apply_commands(session, commands));

  const auto report = completeness(session);
  for (const auto& w : report.warnings) std::cerr << "warning: missing " << w << "\n";
  require_complete(session);

  fs::create_directories(o.out_dir);
  const std::string stem = o.image.stem().string();
  auto emit = [&](const char* kind, const std::string& suffix) {
    const auto doc = export_document(session, kind);
    for (const auto& w : doc.warnings) std::cerr << "warning: " << w << "\n";
    const fs::path out = o.out_dir / (stem + suffix);
    write_text(out, doc.body);
    std::cout << out.string() << "\n";
  };
  const bool all = o.mode == "all";
  if (all || o.mode == "digital") emit("svg-digital", ".svg");
  if (all || o.mode == "print") emit("svg-print", ".print.svg");
  if (all || o.mode == "csv") emit("csv", ".csv");
  if (all || o.mode == "description") emit("description", ".txt");
  return 0;
}

HttpService* g_service = nullptr;

void on_signal(int) {
  if (g_service) g_service->stop();
}

int serve(const std::string& host, int port, const fs::path& data_dir, const fs::path& ocr_stub) {
  StoreConfig config;
  config.data_dir = data_dir;
  if (!ocr_stub.empty()) {
    config.ocr = std::make_shared<StubOcrAdapter>(StubOcrAdapter::from_file(ocr_stub));
  }
  SessionStore store(config);
  HttpService service(store, [](const std::string& line) { std::cerr << line << "\n"; });
  const int bound = service.bind(host, port);
  if (bound < 0) {
    std::cerr << "cannot bind " << host << ":" << port << "\n";
    return 1;
  }
  std::cerr << "listening on " << host << ":" << bound << " (" << store.loaded()
            << " sessions restored)\n";
  g_service = &service;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  service.run();
  g_service = nullptr;
  return 0;
}

int validate(const fs::path& svg, const fs::path& config) {
  PageSpec page;
  if (!config.empty()) page = render_options_from_json(read_json(config)).page;
  const auto violations = validate_print_constraints(read_text(svg), page);
  for (const auto& v : violations) std::cout << v << "\n";
  if (violations.empty()) std::cout << "ok\n";
  return violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line chart digitizer with accessible SVG, tactile SVG, CSV and text exports"};
  app.require_subcommand(1);

  ConvertOptions conv;
  auto* c = app.add_subcommand("convert", "Digitize a chart image without the service");
  c->add_option("image", conv.image, "PNG or JPEG chart")->required()->check(CLI::ExistingFile);
  c->add_option("--calibration", conv.calibration, "Calibration JSON {x: {...}, y: {...}}")
      ->required()
      ->check(CLI::ExistingFile);
  c->add_option("--trace-seed", conv.seeds, "Pixel X,Y on a line; repeat for more lines");
  c->add_option("--polyline", conv.polylines, "JSON [[x,y],...] trace; repeatable")->check(CLI::ExistingFile);
  c->add_option("--name", conv.names, "Series names, in order");
  c->add_option("--tolerance", conv.tolerance, "Color tolerance (RGB distance)")
      ->check(CLI::Range(0.0, kMaxColorTolerance));
  c->add_option("--points", conv.points, "Keypoints per series (default from trace length)");
  c->add_option("--metadata", conv.metadata, "Text fields JSON")->check(CLI::ExistingFile);
  c->add_option("--config", conv.config, "Page and description options JSON")->check(CLI::ExistingFile);
  c->add_option("--ops", conv.ops, "Patch operations applied after tracing")->check(CLI::ExistingFile);
  c->add_option("--out-dir", conv.out_dir, "Output directory");
  c->add_option("--mode", conv.mode, "Which outputs to write")
      ->check(CLI::IsMember({"print", "digital", "csv", "description", "all"}));

  std::string host = "127.0.0.1";
  int port = 8080;
  fs::path data_dir;
  fs::path ocr_stub;
  auto* s = app.add_subcommand("serve", "Run the HTTP session service");
  s->add_option("--host", host);
  s->add_option("--port", port)->check(CLI::Range(0, 65535));
  s->add_option("--data-dir", data_dir, "Where consented sessions are stored")->envname("TACTIPLOT_DATA_DIR");
  s->add_option("--ocr-stub", ocr_stub, "OCR annotations sidecar JSON")->check(CLI::ExistingFile);

  fs::path svg, page_config;
  auto* v = app.add_subcommand("validate", "Check a print SVG against the tactile rules");
  v->add_option("svg", svg)->required()->check(CLI::ExistingFile);
  v->add_option("--config", page_config, "Page options JSON")->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*c) return convert(conv);
    if (*s) return serve(host, port, data_dir, ocr_stub);
    if (*v) return validate(svg, page_config);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
