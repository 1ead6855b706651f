// Copyright 2026 The Pokerforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POKERFORGE_PLAY_HTTP_SERVER_H_
#define POKERFORGE_PLAY_HTTP_SERVER_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "play/session.h"

namespace pokerforge {

// JSON over HTTP in front of a SessionManager.
//
//   GET  /health
//   GET  /presets
//   POST /sessions                   {"script": text | "preset": name, "seed"?: int}
//   POST /sessions/{id}/join         {"seat": k}
//   POST /sessions/{id}/bots         {"seat": k, "seed"?: int}
//   GET  /sessions/{id}/view?seat=k[&after=n&wait_ms=t]
//   GET  /sessions/{id}/legal?seat=k
//   POST /sessions/{id}/actions      {"seat": k, "action": "raise 10"}
//   GET  /sessions/{id}/log[?mode=dsp|nsp]
//   GET  /sessions/{id}/events?seat=k[&after=n&wait_ms=t]
//
// Errors answer {"error": {"code", "message", "line"?}} plus "legal" for
// rejected actions.
class HttpServer {
 public:
  HttpServer(SessionManager& sessions, std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~HttpServer();

  // Binds to an ephemeral port and returns it, or -1.
  int BindAnyPort(const std::string& host);
  bool Bind(const std::string& host, int port);
  // Serves until Stop(). Call after a successful bind.
  bool Serve();
  void Stop();
  void WaitUntilReady() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::string SessionViewToJson(const SessionView& view);
std::string ErrorToJson(const Error& error);

}  // namespace pokerforge

#endif  // POKERFORGE_PLAY_HTTP_SERVER_H_
