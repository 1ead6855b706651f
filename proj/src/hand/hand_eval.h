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

#ifndef POKERFORGE_HAND_HAND_EVAL_H_
#define POKERFORGE_HAND_HAND_EVAL_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "script/game_spec.h"

namespace pokerforge {

struct RankedHand {
  int combination = -1;  // rank_index within the strategy
  std::string name;
  // The realized hand_size subset, in the order it was given.
  Cards cards;
  std::vector<int> tiebreak;
  // Wildcard card -> the regular card it stands for.
  std::vector<std::pair<Card, Card>> wildcard_assignment;
  // Highest effective rank among valued cards; -1 when none.
  int high_rank = -1;
  std::uint64_t strategy_key = 0;

  bool operator==(const RankedHand&) const = default;
};

// Fingerprint of a strategy; hands ranked under different strategies do not
// compare.
std::uint64_t StrategyKey(const RankingStrategy& strategy);

// Best realization of `def` on exactly these cards over every wildcard
// assignment, or nullopt.
std::optional<RankedHand> MatchCombination(const GameSpec& spec, const RankingStrategy& strategy,
                                           const CombinationDef& def, const Cards& cards);

// Highest combination the cards realize (owner-best over wildcards).
RankedHand ClassifyHand(const GameSpec& spec, const RankingStrategy& strategy, const Cards& cards);

// Maximal hand over every hand_size subset obeying the hole-card rule.
// Throws Error(kNoLegalHand).
RankedHand BestHand(const GameSpec& spec, const RankingStrategy& strategy, const Cards& hole,
                    const Cards& community);

// Brute force: every legal subset, every full wildcard assignment.
RankedHand OracleBestHand(const GameSpec& spec, const RankingStrategy& strategy,
                          const Cards& hole, const Cards& community);

// greater means `a` is the stronger hand. Throws Error(kStrategyMismatch).
std::strong_ordering CompareHands(const RankedHand& a, const RankedHand& b,
                                  const RankingStrategy& strategy);

// Effective rank of a value index under the strategy (ace-low aware).
int ValueRank(const GameSpec& spec, const RankingStrategy& strategy, int value);

// Hi/lo qualifier: true when the strategy has none, or the hand is a
// catch-all hand whose highest card ranks no higher than the qualifier.
bool Qualifies(const GameSpec& spec, const RankingStrategy& strategy, const RankedHand& hand);

}  // namespace pokerforge

#endif  // POKERFORGE_HAND_HAND_EVAL_H_
