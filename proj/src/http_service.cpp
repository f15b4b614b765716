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


#include "tactiplot/http_service.hpp"

#include <regex>

#include "httplib.h"

namespace tactiplot {

namespace {

constexpr const char* kJson = "application/json";
const std::string kTokenPattern = "([A-Za-z0-9_-]{16,64})";

bool truthy(const std::string& v) { return v == "1" || v == "true" || v == "yes" || v == "on"; }

void send_json(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, int status, const std::string& code, const std::string& message) {
  send_json(res, status, {{"error", code}, {"message", message}});
}

Json parse_body(const httplib::Request& req) {
  try {
    return req.body.empty() ? Json::object() : Json::parse(req.body);
  } catch (const Json::parse_error&) {
    throw Error(ErrorCode::Format, "request body is not valid JSON");
  }
}

}  // namespace

std::string redact_path(const std::string& path) {
  static const std::regex token("^/sessions/[^/?]+");
  return std::regex_replace(path, token, "/sessions/{token}", std::regex_constants::format_first_only);
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFound: return 404;
    case ErrorCode::PayloadTooLarge: return 413;
    case ErrorCode::UnsupportedMedia: return 415;
    case ErrorCode::AdapterUnavailable: return 503;
    case ErrorCode::Format: return 400;
    default: return 422;
  }
}

HttpService::HttpService(SessionStore& store, LogSink log)
    : store_(store), log_(std::move(log)), server_(std::make_unique<httplib::Server>()) {
  // Room for a maximal image plus multipart framing.
  server_->set_payload_max_length(kMaxUploadBytes + 1024 * 1024);
  if (log_) {
    server_->set_logger([this](const httplib::Request& req, const httplib::Response& res) {
      log_(req.method + " " + redact_path(req.path) + " " + std::to_string(res.status));
    });
  }
  server_->set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    try {
      std::rethrow_exception(ep);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::IncompleteSession) {
        send_error(res, 422, "incomplete-session", e.what());
      } else {
        send_error(res, http_status(e.code()), std::string(to_string(e.code())), e.what());
      }
    } catch (const std::exception& e) {
      send_error(res, 500, "internal", e.what());
    }
  });
  routes();
}

HttpService::~HttpService() = default;

int HttpService::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpService::run() { return server_->listen_after_bind(); }

void HttpService::stop() { server_->stop(); }

void HttpService::wait_until_ready() const { server_->wait_until_ready(); }

void HttpService::routes() {
  auto& srv = *server_;
  const std::string session = "/sessions/" + kTokenPattern;

  srv.Get("/healthz", [this](const httplib::Request&, httplib::Response& res) {
    send_json(res, 200, {{"status", "ok"}, {"sessions", store_.size()}});
  });

  srv.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
    std::string bytes;
    bool consent = false;
    if (req.is_multipart_form_data()) {
      if (!req.has_file("image")) {
        send_error(res, 422, "invalid-input", "multipart upload needs an 'image' part");
        return;
      }
      bytes = req.get_file_value("image").content;
      if (req.has_file("consent")) consent = truthy(req.get_file_value("consent").content);
    } else {
      bytes = req.body;
    }
    if (req.has_param("consent")) consent = truthy(req.get_param_value("consent"));
    auto created = store_.create(
        std::span(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()), consent);
    send_json(res, 201, {{"token", created.token}, {"state", created.state}});
  });

  srv.Get(session, [this](const httplib::Request& req, httplib::Response& res) {
    send_json(res, 200, store_.state(req.matches[1]));
  });

  srv.Patch(session, [this](const httplib::Request& req, httplib::Response& res) {
    const auto result = store_.patch_json(req.matches[1], parse_body(req));
    if (result.conflict) {
      send_json(res, 409, {{"error", "conflict"}, {"version", result.version}, {"state", result.state}});
      return;
    }
    send_json(res, 200, {{"version", result.version}});
  });

  auto history = [this](bool is_undo) {
    return [this, is_undo](const httplib::Request& req, httplib::Response& res) {
      const auto r = is_undo ? store_.undo(req.matches[1]) : store_.redo(req.matches[1]);
      send_json(res, 200,
                {{"version", r.version},
                 {"status", r.status == HistoryStatus::Applied ? "ok" : "empty-history"}});
    };
  };
  srv.Post(session + "/undo", history(true));
  srv.Post(session + "/redo", history(false));

  srv.Post(session + "/trace", [this](const httplib::Request& req, httplib::Response& res) {
    const Json body = parse_body(req);
    if (!body.contains("seed") || !body["seed"].is_array() || body["seed"].size() != 2 ||
        !body["seed"][0].is_number() || !body["seed"][1].is_number()) {
      send_error(res, 422, "invalid-input", "seed must be [x, y]");
      return;
    }
    double tolerance = kDefaultColorTolerance;
    if (body.contains("tolerance")) {
      if (!body["tolerance"].is_number()) {
        send_error(res, 422, "invalid-input", "tolerance must be a number");
        return;
      }
      tolerance = body["tolerance"].get<double>();
    }
    const PixelPoint seed{body["seed"][0].get<double>(), body["seed"][1].get<double>()};
    send_json(res, 200, store_.trace(req.matches[1], seed, tolerance));
  });

  srv.Post(session + "/ocr", [this](const httplib::Request& req, httplib::Response& res) {
    const auto r = store_.ocr(req.matches[1]);
    Json boxes = Json::array();
    for (const auto& b : r.boxes) {
      boxes.push_back({{"x", b.bbox.x},
                       {"y", b.bbox.y},
                       {"w", b.bbox.w},
                       {"h", b.bbox.h},
                       {"text", b.content},
                       {"confidence", b.confidence},
                       {"low_confidence", b.confidence < kLowConfidence}});
    }
    Json body = {{"status", r.status}, {"boxes", boxes}};
    if (!r.message.empty()) body["message"] = r.message;
    send_json(res, 200, body);
  });

  srv.Get(session + "/export", [this](const httplib::Request& req, httplib::Response& res) {
    const std::string kind = req.has_param("kind") ? req.get_param_value("kind") : "";
    const auto report_now = completeness(store_.snapshot(req.matches[1]));
    if (!report_now.complete()) {
      send_json(res, 422, {{"error", "incomplete-session"},
                           {"missing", report_now.missing},
                           {"warnings", report_now.warnings}});
      return;
    }
    const auto r = store_.export_as(req.matches[1], kind);
    const Json report = {{"missing", r.report.missing},
                         {"warnings", r.report.warnings},
                         {"render_warnings", r.warnings}};
    res.set_header("X-Completeness-Report", report.dump());
    res.status = 200;
    res.set_content(r.body, r.content_type);
  });
}

}  // namespace tactiplot
