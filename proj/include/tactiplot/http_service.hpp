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

#include <functional>
#include <memory>
#include <string>

#include "tactiplot/error.hpp"
#include "tactiplot/session_store.hpp"

namespace httplib {
class Server;
}

namespace tactiplot {

// Replaces session tokens in a request path with "{token}".
std::string redact_path(const std::string& path);

// HTTP status for an error code.
int http_status(ErrorCode code);

// JSON API over a SessionStore:
//   POST   /sessions                       multipart "image" + "consent", or a raw image body
//   GET    /sessions/{token}
//   PATCH  /sessions/{token}               {"base_version": n, "ops": [...]}
//   POST   /sessions/{token}/undo | /redo
//   POST   /sessions/{token}/trace         {"seed": [x, y], "tolerance": t}
//   POST   /sessions/{token}/ocr
//   GET    /sessions/{token}/export?kind=svg-digital|svg-print|csv|description
//   GET    /healthz
class HttpService {
 public:
  using LogSink = std::function<void(const std::string&)>;

  explicit HttpService(SessionStore& store, LogSink log = {});
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Port 0 picks a free port. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  bool run();
  void stop();
  void wait_until_ready() const;

 private:
  void routes();

  SessionStore& store_;
  LogSink log_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace tactiplot
