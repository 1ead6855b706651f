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

#ifndef POKERFORGE_STATE_GAME_STATE_H_
#define POKERFORGE_STATE_GAME_STATE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "script/game_spec.h"

namespace pokerforge {

// Message endpoints. Sources are always the engine today; targets are a seat
// or everybody.
inline constexpr int kEngine = -1;
inline constexpr int kAllPlayers = -1;

struct Pot {
  Chips amount = 0;
  std::vector<int> eligible;  // sorted seat ids

  bool operator==(const Pot&) const = default;
};

struct Message {
  int source = kEngine;
  int target = kAllPlayers;
  std::string text;

  bool operator==(const Message&) const = default;
};

// One revealed hand at showdown.
struct ShowdownEntry {
  int player = 0;
  int strategy = 0;
  std::string combination;
  Cards cards;

  bool operator==(const ShowdownEntry&) const = default;
};

struct GameState {
  std::vector<FlowStep> flow_cache;
  std::int64_t seed = 0;
  int button = 0;
  Cards deck;
  std::vector<Cards> hole;
  Cards community;
  std::vector<Cards> discards;
  std::vector<Chips> stacks;
  std::vector<Chips> street_bets;
  std::vector<Pot> pots;
  std::optional<int> current_actor;
  // Seats still owed an action in the current bet or switch step, in turn
  // order; current_actor is its head.
  std::vector<int> pending;
  // Raises made in the current betting street.
  int raises = 0;
  std::vector<int> folded;
  std::vector<int> all_in;
  std::vector<ShowdownEntry> showdown;
  // Directives produced by the latest transition.
  std::vector<Message> messages;

  bool operator==(const GameState&) const = default;

  bool IsFolded(int p) const;
  bool IsAllIn(int p) const;
  bool IsBlank() const { return flow_cache.empty(); }
  bool IsTerminal() const {
    return !flow_cache.empty() && flow_cache.back().kind == StepKind::kPrize;
  }
};

// Pre-round state: only the seed is known. The start transition leaves it.
GameState BlankState(std::int64_t seed);

// Canonical text codec. The first line is kStateHeader; then one
// "key: value" line per key in canonical order.
inline constexpr std::string_view kStateHeader = "#state v1";

std::string SerializeState(const GameState& state);
// Throws Error(kMalformedState, line) or Error(kUnknownKey).
GameState ParseState(std::string_view text);

// Redacted copy for one seat. Throws Error(kUnknownPlayer).
GameState ViewForPlayer(const GameState& state, int player);

// Reports every broken state invariant. Codes: Shape, UnknownCard,
// CardConservation, NegativeChips, ChipConservation, PotEligibility,
// ActorState, PlayerSet, FlowCache, Button, MessageTarget.
Violations ValidateState(const GameSpec& spec, const GameState& state);

std::string RenderPot(const Pot& pot);
std::string RenderMessage(const Message& m);
std::string RenderShowdownEntry(const ShowdownEntry& e);

}  // namespace pokerforge

#endif  // POKERFORGE_STATE_GAME_STATE_H_
