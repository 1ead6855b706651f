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

#include "play/session.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "common/rng.h"
#include "common/strings.h"
#include "script/script.h"

namespace pokerforge {

using Json = nlohmann::ordered_json;

std::string_view SeatKindName(SeatKind kind) {
  switch (kind) {
    case SeatKind::kOpen: return "open";
    case SeatKind::kHuman: return "human";
    case SeatKind::kBot: return "bot";
  }
  return "open";
}

std::string_view SessionStatusName(SessionStatus status) {
  switch (status) {
    case SessionStatus::kWaiting: return "waiting";
    case SessionStatus::kActive: return "active";
    case SessionStatus::kFinished: return "finished";
  }
  return "waiting";
}

class Session {
 public:
  // A replaying session records nothing until SetRecording(true).
  Session(std::string id, std::string script, std::int64_t seed, std::optional<std::filesystem::path> file,
          bool replaying = false)
      : id_(std::move(id)), script_(std::move(script)), seed_(seed), file_(std::move(file)), replaying_(replaying) {
    spec_ = ParseScript(script_);
    RequireValidSpec(spec_);
    seats_.assign(static_cast<std::size_t>(spec_.num_players), Seat{});
    bots_.resize(seats_.size());
    Record(Json{{"event", "create"}, {"id", id_}, {"script", script_}, {"seed", seed_}});
    Apply(PlayerInput::None());
  }

  void Join(int seat) {
    std::unique_lock lock(mu_);
    Claim(seat);
    seats_[seat].kind = SeatKind::kHuman;
    Record(Json{{"event", "join"}, {"seat", seat}});
    Advance();
  }

  void AddBot(int seat, std::uint64_t bot_seed) {
    std::unique_lock lock(mu_);
    Claim(seat);
    seats_[seat] = Seat{SeatKind::kBot, bot_seed};
    bots_[seat] = RandomPolicy(bot_seed);
    Record(Json{{"event", "bot"}, {"seat", seat}, {"seed", bot_seed}});
    Advance();
  }

  SessionView View(int seat) const {
    std::unique_lock lock(mu_);
    return ViewLocked(seat);
  }

  SessionView WaitView(int seat, std::size_t after, std::chrono::milliseconds timeout) const {
    std::unique_lock lock(mu_);
    CheckSeat(seat);
    cv_.wait_for(lock, timeout, [&] { return log_.size() > after; });
    return ViewLocked(seat);
  }

  std::vector<SessionEvent> Events(int seat, std::size_t after, std::chrono::milliseconds timeout) const {
    std::unique_lock lock(mu_);
    CheckSeat(seat);
    cv_.wait_for(lock, timeout, [&] { return log_.size() > after; });
    std::vector<SessionEvent> out;
    for (std::size_t i = after; i < log_.size(); ++i) {
      const Transition& t = log_[i];
      SessionEvent e;
      e.step = i + 1;
      e.category = t.category;
      e.input = RenderInput(t.input);
      e.messages = ViewForPlayer(t.next, seat).messages;
      out.push_back(std::move(e));
    }
    return out;
  }

  SessionView Act(int seat, const std::string& action) {
    std::unique_lock lock(mu_);
    CheckSeat(seat);
    if (status_ != SessionStatus::kActive || state_.current_actor != seat) {
      Fail(ErrorCode::kNotYourTurn, "seat " + std::to_string(seat) + " is not on turn");
    }
    if (seats_[seat].kind != SeatKind::kHuman) Fail(ErrorCode::kNotYourTurn, "seat is played by a bot");
    PlayerInput input;
    try {
      input = ParseInput(std::to_string(seat) + " " + std::string(Trim(action)));
    } catch (const Error& e) {
      Fail(ErrorCode::kIllegalAction, e.what());
    }
    Apply(input);
    Record(Json{{"event", "action"}, {"seat", seat}, {"input", action}});
    Advance();
    return ViewLocked(seat);
  }

  std::vector<std::string> Legal(int seat) const {
    std::unique_lock lock(mu_);
    CheckSeat(seat);
    return LegalLocked(seat);
  }

  std::vector<SampleRecord> Log(SampleMode mode) const {
    std::unique_lock lock(mu_);
    RoundLog round{spec_, seed_, log_};
    return EmitSamples(round, mode, 0);
  }

  GameState TrueState() const {
    std::unique_lock lock(mu_);
    return state_;
  }

  GameSpec Spec() const { return spec_; }

  void Replay(const Json& event) {
    const std::string kind = event.at("event").get<std::string>();
    if (kind == "join") {
      Join(event.at("seat").get<int>());
    } else if (kind == "bot") {
      AddBot(event.at("seat").get<int>(), event.at("seed").get<std::uint64_t>());
    } else if (kind == "action") {
      Act(event.at("seat").get<int>(), event.at("input").get<std::string>());
    }
  }

  void SetRecording(bool on) { replaying_ = !on; }

 private:
  void CheckSeat(int seat) const {
    if (seat < 0 || seat >= static_cast<int>(seats_.size())) {
      Fail(ErrorCode::kUnknownPlayer, "no seat " + std::to_string(seat));
    }
  }

  void Claim(int seat) {
    CheckSeat(seat);
    if (seats_[seat].kind != SeatKind::kOpen) {
      Fail(ErrorCode::kInvalidArgument, "seat " + std::to_string(seat) + " is taken");
    }
  }

  std::vector<std::string> LegalLocked(int seat) const {
    std::vector<std::string> out;
    if (status_ != SessionStatus::kActive || state_.current_actor != seat) return out;
    for (const auto& in : LegalActions(spec_, state_)) {
      const std::string text = RenderInput(in);
      out.push_back(text.substr(text.find(' ') + 1));
    }
    return out;
  }

  SessionView ViewLocked(int seat) const {
    CheckSeat(seat);
    SessionView v;
    v.session = id_;
    v.seat = seat;
    v.step = log_.size();
    v.status = status_;
    v.game = spec_.name;
    v.state = ViewForPlayer(state_, seat);
    v.seats = seats_;
    v.your_turn = status_ == SessionStatus::kActive && state_.current_actor == seat;
    v.legal_actions = LegalLocked(seat);
    return v;
  }

  void Apply(const PlayerInput& input) {
    StepResult r = Step(spec_, state_, input);
    log_.push_back(Transition{state_, input, r.next, r.diff, r.category});
    state_ = std::move(r.next);
    Record(Json{{"event", "transition"},
                {"step", log_.size()},
                {"category", StepKindName(r.category)},
                {"input", RenderInput(input)},
                {"diff", RenderDiff(r.diff)}});
    if (state_.IsTerminal()) status_ = SessionStatus::kFinished;
    cv_.notify_all();
  }

  // Runs automatic steps and bot turns until a human must act.
  void Advance() {
    if (status_ == SessionStatus::kWaiting) {
      const bool full = std::none_of(seats_.begin(), seats_.end(),
                                     [](const Seat& s) { return s.kind == SeatKind::kOpen; });
      if (!full) return;
      status_ = SessionStatus::kActive;
    }
    while (status_ == SessionStatus::kActive) {
      if (!state_.current_actor) {
        Apply(PlayerInput::None());
        continue;
      }
      const int p = *state_.current_actor;
      if (seats_[p].kind != SeatKind::kBot) break;
      Apply(bots_[p](spec_, state_, LegalActions(spec_, state_)));
    }
    cv_.notify_all();
  }

  void Record(const Json& event) {
    if (!file_ || replaying_) return;
    std::ofstream out(*file_, std::ios::app);
    out << event.dump() << "\n";
    out.flush();
    if (!out) Fail(ErrorCode::kIo, "cannot write " + file_->string());
  }

  std::string id_;
  std::string script_;
  std::int64_t seed_;
  std::optional<std::filesystem::path> file_;
  bool replaying_;

  GameSpec spec_;
  std::vector<Seat> seats_;
  std::vector<Policy> bots_;
  GameState state_;
  std::vector<Transition> log_;
  SessionStatus status_ = SessionStatus::kWaiting;

  mutable std::mutex mu_;
  mutable std::condition_variable cv_;
};

SessionManager::SessionManager(std::optional<std::filesystem::path> data_dir) : data_dir_(std::move(data_dir)) {
  if (data_dir_) {
    std::error_code ec;
    std::filesystem::create_directories(*data_dir_, ec);
    if (ec) Fail(ErrorCode::kIo, "cannot create " + data_dir_->string() + ": " + ec.message());
  }
}

SessionManager::~SessionManager() = default;

std::string SessionManager::Create(const std::string& script, std::optional<std::int64_t> seed) {
  std::unique_lock lock(mu_);
  const std::uint64_t n = ++counter_;
  char buf[16];
  std::snprintf(buf, sizeof buf, "s%06llu", static_cast<unsigned long long>(n));
  const std::string id = buf;
  const std::int64_t round_seed = seed ? *seed : static_cast<std::int64_t>(DeriveSeed(0x5e55, {n}) & kSeedMask);
  std::optional<std::filesystem::path> file;
  if (data_dir_) file = *data_dir_ / (id + ".jsonl");
  try {
    sessions_[id] = std::make_shared<Session>(id, script, round_seed, file);
  } catch (...) {
    --counter_;
    if (file) std::filesystem::remove(*file);
    throw;
  }
  return id;
}

std::shared_ptr<Session> SessionManager::Find(const std::string& id) const {
  std::shared_lock lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) Fail(ErrorCode::kUnknownSession, "no session '" + id + "'");
  return it->second;
}

void SessionManager::Join(const std::string& id, int seat) { Find(id)->Join(seat); }

void SessionManager::AddBot(const std::string& id, int seat, std::uint64_t bot_seed) {
  Find(id)->AddBot(seat, bot_seed);
}

SessionView SessionManager::View(const std::string& id, int seat) const { return Find(id)->View(seat); }

SessionView SessionManager::WaitView(const std::string& id, int seat, std::size_t after,
                                     std::chrono::milliseconds timeout) const {
  return Find(id)->WaitView(seat, after, timeout);
}

std::vector<SessionEvent> SessionManager::Events(const std::string& id, int seat, std::size_t after,
                                                 std::chrono::milliseconds timeout) const {
  return Find(id)->Events(seat, after, timeout);
}

SessionView SessionManager::Act(const std::string& id, int seat, const std::string& action) {
  return Find(id)->Act(seat, action);
}

std::vector<std::string> SessionManager::LegalActionsFor(const std::string& id, int seat) const {
  return Find(id)->Legal(seat);
}

std::vector<SampleRecord> SessionManager::Log(const std::string& id, SampleMode mode) const {
  return Find(id)->Log(mode);
}

GameState SessionManager::TrueState(const std::string& id) const { return Find(id)->TrueState(); }

GameSpec SessionManager::Spec(const std::string& id) const { return Find(id)->Spec(); }

std::vector<std::string> SessionManager::Ids() const {
  std::shared_lock lock(mu_);
  std::vector<std::string> out;
  for (const auto& [id, s] : sessions_) out.push_back(id);
  return out;
}

int SessionManager::Restore() {
  if (!data_dir_) return 0;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(*data_dir_)) {
    if (entry.path().extension() == ".jsonl") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  int restored = 0;
  for (const auto& path : files) {
    std::ifstream in(path);
    std::string line;
    std::shared_ptr<Session> session;
    std::string id;
    while (std::getline(in, line)) {
      if (Trim(line).empty()) continue;
      Json event = Json::parse(line, nullptr, false);
      if (event.is_discarded()) Fail(ErrorCode::kIo, "corrupt event in " + path.string());
      const std::string kind = event.value("event", "");
      if (kind == "create") {
        id = event.at("id").get<std::string>();
        session = std::make_shared<Session>(id, event.at("script").get<std::string>(),
                                            event.at("seed").get<std::int64_t>(), path, true);
      } else if (session && kind != "transition") {
        session->Replay(event);
      }
    }
    if (!session) continue;
    session->SetRecording(true);
    std::unique_lock lock(mu_);
    sessions_[id] = session;
    if (id.size() > 1 && id[0] == 's') {
      if (auto n = ParseInt(id.substr(1))) counter_ = std::max<std::uint64_t>(counter_, static_cast<std::uint64_t>(*n));
    }
    ++restored;
  }
  return restored;
}

}  // namespace pokerforge
