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

#ifndef POKERFORGE_ENGINE_CORE_OPS_H_
#define POKERFORGE_ENGINE_CORE_OPS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "hand/hand_eval.h"
#include "script/game_spec.h"
#include "state/game_state.h"

namespace pokerforge {

// Deterministic state transformers shared by the engine and the diff
// interpreter. Each throws Error(kIllegalState) when its precondition fails
// and leaves the state untouched in that case.

// Permutes the deck with a seeded shuffle; appends "shuffle".
void CoreShuffle(GameState& state, std::uint64_t seed);
// Small and big blinds from the two seats left of the button; appends
// "blind". A short stack posts everything and goes all-in.
void CorePostBlinds(const GameSpec& spec, GameState& state);
// n cards to each listed seat (every seat when `to` is unset), one at a time
// round-robin from the seat left of the button. Appends "deal n" for a deal
// to every seat.
void CoreDeal(const GameSpec& spec, GameState& state, int n, const std::optional<std::vector<int>>& to);
// n deck cards to the community; appends "flop n".
void CoreFlop(GameState& state, int n);
// Orders a seat's hole cards canonically.
void CoreSortHand(const GameSpec& spec, GameState& state, int player);
// Appends a showdown entry per unfolded seat under one strategy.
void CoreRankHands(const GameSpec& spec, GameState& state, int strategy);
// Moves street bets into the pots, layering side pots; resets raises.
void CoreCollectBets(GameState& state);
// Drops the head of pending and makes the next seat current.
void CoreNextActor(GameState& state);
// Moves cards from a seat's hole to its discard pile.
void CoreDiscard(GameState& state, int player, const Cards& cards);
// n deck cards to the end of a seat's hole.
void CoreDraw(GameState& state, int player, int n);
// Shuffles every discard pile into the bottom of the deck.
void CoreRecycle(GameState& state, std::uint64_t seed);
// Settles every pot and appends "prize".
void CoreAward(const GameSpec& spec, GameState& state);

// Layered pots from one street's contributions. Folded chips stay in the
// layers they reached; folded seats are never eligible.
std::vector<Pot> BuildSidePots(const std::vector<Chips>& contributions, const std::vector<int>& all_in,
                               const std::vector<int>& folded);

// Per-seat best hand under one strategy; nullopt for seats out of the pot.
using StrategyRanking = std::vector<std::optional<RankedHand>>;

// Chips each seat receives. Per pot: strategies with a qualifying eligible
// hand share it (strategy listed first takes the odd chip); each share goes
// to that strategy's best eligible hands, split evenly with odd chips one
// each from the seat left of the button.
std::vector<Chips> DistributePrize(const GameSpec& spec, const std::vector<Pot>& pots,
                                   const std::vector<StrategyRanking>& rankings, int button);

// Seats in turn order starting at `from`.
std::vector<int> SeatsFrom(int num_players, int from);
std::vector<int> Unfolded(const GameState& state);

}  // namespace pokerforge

#endif  // POKERFORGE_ENGINE_CORE_OPS_H_
