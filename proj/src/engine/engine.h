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

#ifndef POKERFORGE_ENGINE_ENGINE_H_
#define POKERFORGE_ENGINE_ENGINE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "diff/diff.h"
#include "script/game_spec.h"
#include "state/game_state.h"

namespace pokerforge {

enum class ActionKind { kNone, kCheck, kCall, kRaise, kFold, kAllIn, kDiscard };

struct PlayerInput {
  int player = -1;  // -1 for automatic steps
  ActionKind kind = ActionKind::kNone;
  Chips amount = 0;  // raise size above the call
  Cards cards;       // discards

  bool operator==(const PlayerInput&) const = default;

  static PlayerInput None() { return PlayerInput{}; }
};

// "none", "0 check", "2 raise 10", "1 discard H3 D4", "1 discard".
std::string RenderInput(const PlayerInput& input);
// Throws Error(kInvalidArgument).
PlayerInput ParseInput(std::string_view text);

// The step the next transition works on, or nullopt once the round is over.
// A round left with one unfolded seat jumps straight to prize.
std::optional<FlowStep> NextStep(const GameSpec& spec, const GameState& state);

// Round state after the start step. Throws Error(kInvalidSpec).
GameState InitRound(const GameSpec& spec, std::int64_t seed);

// Every legal input for the current actor; empty when nobody is to act.
// Raises are listed once per amount.
std::vector<PlayerInput> LegalActions(const GameSpec& spec, const GameState& state);
// Chips the current actor needs to call.
Chips ToCall(const GameState& state, int player);

struct StepResult {
  GameState next;
  DiffScript diff;
  StepKind category = StepKind::kStart;
};

// One transition. Automatic steps take PlayerInput::None(); the blank state
// from BlankState(seed) steps into the start state. Throws
// Error(kIllegalAction) and leaves nothing changed.
StepResult Step(const GameSpec& spec, const GameState& state, const PlayerInput& input);

struct Transition {
  GameState prev;
  PlayerInput input;
  GameState next;
  DiffScript diff;
  StepKind category = StepKind::kStart;
};

struct RoundLog {
  GameSpec spec;
  std::int64_t seed = 0;
  std::vector<Transition> transitions;
};

using Policy = std::function<PlayerInput(const GameSpec&, const GameState&, const std::vector<PlayerInput>&)>;

// Plays from the blank state to prize. Throws Error(kNonTermination) past
// 10 x |flow| x players transitions.
RoundLog RunRound(const GameSpec& spec, std::int64_t seed, const std::vector<Policy>& policies);

// Folds 10% and goes all-in 5% of the time when legal; otherwise picks
// uniformly among check, call and raise, then uniformly among amounts.
// Discards are uniform over the legal subsets.
Policy RandomPolicy(std::uint64_t seed);
// One random policy per seat, seeded from the round seed.
std::vector<Policy> RandomPolicies(const GameSpec& spec, std::int64_t round_seed);

std::string_view ActionKindName(ActionKind kind);

}  // namespace pokerforge

#endif  // POKERFORGE_ENGINE_ENGINE_H_
