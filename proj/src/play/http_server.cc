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

#include "play/http_server.h"

#include <algorithm>

#include <httplib.h>
#include <json.hpp>

#include "script/presets.h"

namespace pokerforge {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kMaxWaitMs = 30000;

Json CardsJson(const Cards& cards) {
  Json a = Json::array();
  for (const auto& c : cards) a.push_back(c.token);
  return a;
}

Json StateJson(const GameState& s) {
  Json j;
  Json flow = Json::array();
  for (const auto& f : s.flow_cache) flow.push_back(RenderFlowStep(f));
  j["flow_cache"] = flow;
  j["button"] = s.button;
  j["deck_size"] = s.deck.size();
  Json hole = Json::array();
  for (const auto& h : s.hole) hole.push_back(CardsJson(h));
  j["hole"] = hole;
  j["community"] = CardsJson(s.community);
  Json discards = Json::array();
  for (const auto& d : s.discards) discards.push_back(CardsJson(d));
  j["discards"] = discards;
  j["stacks"] = s.stacks;
  j["street_bets"] = s.street_bets;
  Json pots = Json::array();
  for (const auto& p : s.pots) pots.push_back({{"amount", p.amount}, {"eligible", p.eligible}});
  j["pots"] = pots;
  j["current_actor"] = s.current_actor ? Json(*s.current_actor) : Json(nullptr);
  j["raises"] = s.raises;
  j["folded"] = s.folded;
  j["all_in"] = s.all_in;
  Json showdown = Json::array();
  for (const auto& e : s.showdown) {
    showdown.push_back({{"player", e.player},
                        {"strategy", e.strategy},
                        {"combination", e.combination},
                        {"cards", CardsJson(e.cards)}});
  }
  j["showdown"] = showdown;
  Json messages = Json::array();
  for (const auto& m : s.messages) messages.push_back({{"target", m.target}, {"text", m.text}});
  j["messages"] = messages;
  return j;
}

int HttpStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownSession: return 404;
    case ErrorCode::kNotYourTurn:
    case ErrorCode::kIllegalAction: return 409;
    case ErrorCode::kIo: return 500;
    default: return 400;
  }
}

void Reply(httplib::Response& res, int status, const std::string& body) {
  res.status = status;
  res.set_content(body, "application/json");
}

void ReplyError(httplib::Response& res, const Error& e, const std::vector<std::string>* legal = nullptr) {
  Json j = Json::parse(ErrorToJson(e));
  if (legal) j["legal"] = *legal;
  Reply(res, HttpStatus(e.code()), j.dump());
}

Json Body(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  Json j = Json::parse(req.body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) Fail(ErrorCode::kInvalidArgument, "body must be a JSON object");
  return j;
}

int IntParam(const httplib::Request& req, const Json& body, const char* name, std::optional<int> fallback) {
  if (body.contains(name)) {
    if (!body[name].is_number_integer()) Fail(ErrorCode::kInvalidArgument, std::string(name) + " must be an integer");
    return body[name].get<int>();
  }
  if (req.has_param(name)) {
    try {
      return std::stoi(req.get_param_value(name));
    } catch (const std::exception&) {
      Fail(ErrorCode::kInvalidArgument, std::string(name) + " must be an integer");
    }
  }
  if (!fallback) Fail(ErrorCode::kInvalidArgument, std::string("missing ") + name);
  return *fallback;
}

// Runs a handler and turns library errors into JSON replies.
template <typename F>
httplib::Server::Handler Guard(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const Error& e) {
      ReplyError(res, e);
    } catch (const std::exception& e) {
      ReplyError(res, Error(ErrorCode::kInvalidArgument, e.what()));
    }
  };
}

}  // namespace

std::string SessionViewToJson(const SessionView& v) {
  Json j;
  j["session"] = v.session;
  j["seat"] = v.seat;
  j["step"] = v.step;
  j["status"] = SessionStatusName(v.status);
  j["game"] = v.game;
  Json seats = Json::array();
  for (const auto& s : v.seats) seats.push_back(SeatKindName(s.kind));
  j["seats"] = seats;
  j["your_turn"] = v.your_turn;
  j["legal_actions"] = v.legal_actions;
  j["state"] = StateJson(v.state);
  j["state_text"] = SerializeState(v.state);
  return j.dump();
}

std::string ErrorToJson(const Error& e) {
  Json err;
  err["code"] = ErrorCodeName(e.code());
  err["message"] = e.what();
  if (e.line() > 0) err["line"] = e.line();
  return Json{{"error", err}}.dump();
}

struct HttpServer::Impl {
  explicit Impl(SessionManager& s) : sessions(s) {}
  SessionManager& sessions;
  httplib::Server server;
};

HttpServer::HttpServer(SessionManager& sessions, std::optional<std::filesystem::path> static_dir)
    : impl_(std::make_unique<Impl>(sessions)) {
  auto& srv = impl_->server;
  SessionManager& sm = impl_->sessions;
  if (static_dir) srv.set_mount_point("/", static_dir->string());

  srv.Get("/health", [](const httplib::Request&, httplib::Response& res) { Reply(res, 200, R"({"ok":true})"); });

  srv.Get("/presets", Guard([](const httplib::Request&, httplib::Response& res) {
            Json list = Json::array();
            for (const auto& name : PresetNames()) {
              list.push_back({{"name", name}, {"game", LoadPreset(name).name}, {"script", PresetScript(name)}});
            }
            Reply(res, 200, list.dump());
          }));

  srv.Post("/sessions", Guard([&sm](const httplib::Request& req, httplib::Response& res) {
             Json body = Body(req);
             std::string script;
             if (body.contains("script") && body["script"].is_string()) {
               script = body["script"].get<std::string>();
             } else if (body.contains("preset") && body["preset"].is_string()) {
               script = std::string(PresetScript(body["preset"].get<std::string>()));
             } else {
               Fail(ErrorCode::kInvalidArgument, "give a script or a preset");
             }
             std::optional<std::int64_t> seed;
             if (body.contains("seed")) seed = body["seed"].get<std::int64_t>();
             const std::string id = sm.Create(script, seed);
             const GameSpec spec = sm.Spec(id);
             Reply(res, 201, Json{{"id", id}, {"game", spec.name}, {"players", spec.num_players}, {"status", "waiting"}}.dump());
           }));

  srv.Post(R"(/sessions/([^/]+)/join)", Guard([&sm](const httplib::Request& req, httplib::Response& res) {
             const std::string id = req.matches[1];
             const int seat = IntParam(req, Body(req), "seat", std::nullopt);
             sm.Join(id, seat);
             Reply(res, 200, SessionViewToJson(sm.View(id, seat)));
           }));

  srv.Post(R"(/sessions/([^/]+)/bots)", Guard([&sm](const httplib::Request& req, httplib::Response& res) {
             const std::string id = req.matches[1];
             Json body = Body(req);
             const int seat = IntParam(req, body, "seat", std::nullopt);
             const auto seed = body.contains("seed") ? body["seed"].get<std::uint64_t>() : static_cast<std::uint64_t>(seat);
             sm.AddBot(id, seat, seed);
             Reply(res, 200, SessionViewToJson(sm.View(id, seat)));
           }));

  srv.Get(R"(/sessions/([^/]+)/view)", Guard([&sm](const httplib::Request& req, httplib::Response& res) {
            const std::string id = req.matches[1];
            const Json none = Json::object();
            const int seat = IntParam(req, none, "seat", std::nullopt);
            const int wait = std::clamp(IntParam(req, none, "wait_ms", 0), 0, kMaxWaitMs);
            SessionView v = req.has_param("after")
                                ? sm.WaitView(id, seat, static_cast<std::size_t>(IntParam(req, none, "after", 0)),
                                              std::chrono::milliseconds(wait))
                                : sm.View(id, seat);
            Reply(res, 200, SessionViewToJson(v));
          }));

  srv.Get(R"(/sessions/([^/]+)/legal)", Guard([&sm](const httplib::Request& req, httplib::Response& res) {
            const std::string id = req.matches[1];
            const int seat = IntParam(req, Json::object(), "seat", std::nullopt);
            Reply(res, 200, Json{{"legal", sm.LegalActionsFor(id, seat)}}.dump());
          }));

  srv.Post(R"(/sessions/([^/]+)/actions)", Guard([&sm](const httplib::Request& req, httplib::Response& res) {
             const std::string id = req.matches[1];
             Json body = Body(req);
             const int seat = IntParam(req, body, "seat", std::nullopt);
             if (!body.contains("action") || !body["action"].is_string()) {
               Fail(ErrorCode::kInvalidArgument, "missing action");
             }
             try {
               Reply(res, 200, SessionViewToJson(sm.Act(id, seat, body["action"].get<std::string>())));
             } catch (const Error& e) {
               if (e.code() != ErrorCode::kIllegalAction) throw;
               const auto legal = sm.LegalActionsFor(id, seat);
               ReplyError(res, e, &legal);
             }
           }));

  srv.Get(R"(/sessions/([^/]+)/log)", Guard([&sm](const httplib::Request& req, httplib::Response& res) {
            const std::string id = req.matches[1];
            const SampleMode mode = req.has_param("mode") ? ParseSampleMode(req.get_param_value("mode")) : SampleMode::kDsp;
            res.status = 200;
            res.set_content(RenderCorpus(sm.Log(id, mode)), "application/x-ndjson");
          }));

  srv.Get(R"(/sessions/([^/]+)/events)", Guard([&sm](const httplib::Request& req, httplib::Response& res) {
            const std::string id = req.matches[1];
            const Json none = Json::object();
            const int seat = IntParam(req, none, "seat", std::nullopt);
            const auto after = static_cast<std::size_t>(std::max(0, IntParam(req, none, "after", 0)));
            const int wait = std::clamp(IntParam(req, none, "wait_ms", 0), 0, kMaxWaitMs);
            Json events = Json::array();
            std::size_t last = after;
            for (const auto& e : sm.Events(id, seat, after, std::chrono::milliseconds(wait))) {
              Json messages = Json::array();
              for (const auto& m : e.messages) messages.push_back({{"target", m.target}, {"text", m.text}});
              events.push_back({{"step", e.step},
                                {"category", StepKindName(e.category)},
                                {"input", e.input},
                                {"messages", messages}});
              last = e.step;
            }
            Reply(res, 200, Json{{"step", last}, {"events", events}}.dump());
          }));
}

HttpServer::~HttpServer() = default;

int HttpServer::BindAnyPort(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool HttpServer::Bind(const std::string& host, int port) { return impl_->server.bind_to_port(host, port); }

bool HttpServer::Serve() { return impl_->server.listen_after_bind(); }

void HttpServer::Stop() { impl_->server.stop(); }

void HttpServer::WaitUntilReady() const { impl_->server.wait_until_ready(); }

}  // namespace pokerforge
