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

#ifndef POKERFORGE_PLAY_SESSION_H_
#define POKERFORGE_PLAY_SESSION_H_

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "datagen/datagen.h"
#include "engine/engine.h"

namespace pokerforge {

enum class SeatKind { kOpen, kHuman, kBot };
enum class SessionStatus { kWaiting, kActive, kFinished };

std::string_view SeatKindName(SeatKind kind);
std::string_view SessionStatusName(SessionStatus status);

struct Seat {
  SeatKind kind = SeatKind::kOpen;
  std::uint64_t bot_seed = 0;
};

// What one seat may see at one moment.
struct SessionView {
  std::string session;
  int seat = 0;
  // Number of logged transitions; grows by one per state change.
  std::size_t step = 0;
  SessionStatus status = SessionStatus::kWaiting;
  std::string game;
  GameState state;  // redacted for the seat
  std::vector<Seat> seats;
  bool your_turn = false;
  // Inputs the seat may submit now, without the leading seat number.
  std::vector<std::string> legal_actions;
};

// One logged transition as seen by a seat: the redacted result and the
// input that caused it.
struct SessionEvent {
  std::size_t step = 0;  // 1-based position in the log
  StepKind category = StepKind::kStart;
  std::string input;
  std::vector<Message> messages;  // filtered for the seat
};

class Session;

// Owns every session. Sessions are independent; each one serializes its own
// mutations. When a data directory is set every session appends its events
// to <dir>/<id>.jsonl and Restore() rebuilds sessions from those files.
class SessionManager {
 public:
  explicit SessionManager(std::optional<std::filesystem::path> data_dir = std::nullopt);
  ~SessionManager();

  SessionManager(const SessionManager&) = delete;
  SessionManager& operator=(const SessionManager&) = delete;

  // Parses and validates the script; errors propagate unchanged. The round
  // seed defaults to one derived from the session counter.
  std::string Create(const std::string& script, std::optional<std::int64_t> seed = std::nullopt);
  // Throws Error(kUnknownSession), Error(kUnknownPlayer) or
  // Error(kInvalidArgument) when the seat is taken.
  void Join(const std::string& id, int seat);
  void AddBot(const std::string& id, int seat, std::uint64_t bot_seed);
  // Throws Error(kUnknownSession) or Error(kUnknownPlayer).
  SessionView View(const std::string& id, int seat) const;
  // Blocks until the session has more than `after` transitions or the
  // timeout passes, then returns the view.
  SessionView WaitView(const std::string& id, int seat, std::size_t after, std::chrono::milliseconds timeout) const;
  // Events after position `after`, waiting up to `timeout` for one to exist.
  std::vector<SessionEvent> Events(const std::string& id, int seat, std::size_t after,
                                   std::chrono::milliseconds timeout) const;
  // `action` is an input without the seat number ("raise 10", "discard H3").
  // Throws Error(kUnknownSession), Error(kNotYourTurn), or
  // Error(kIllegalAction) with the state unchanged; the legal set is
  // available through LegalActionsFor.
  SessionView Act(const std::string& id, int seat, const std::string& action);
  std::vector<std::string> LegalActionsFor(const std::string& id, int seat) const;
  // The session's transitions in corpus format, round_id 0.
  std::vector<SampleRecord> Log(const std::string& id, SampleMode mode) const;
  // Full unredacted state, for export checks.
  GameState TrueState(const std::string& id) const;
  GameSpec Spec(const std::string& id) const;
  std::vector<std::string> Ids() const;

  // Loads every event file in the data directory. Returns the number of
  // sessions restored.
  int Restore();

 private:
  std::shared_ptr<Session> Find(const std::string& id) const;

  std::optional<std::filesystem::path> data_dir_;
  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t counter_ = 0;
};

}  // namespace pokerforge

#endif  // POKERFORGE_PLAY_SESSION_H_
