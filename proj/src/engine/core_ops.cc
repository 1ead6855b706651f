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

#include "engine/core_ops.h"

#include <algorithm>
#include <map>

#include "common/error.h"
#include "common/rng.h"

namespace pokerforge {
namespace {

int Seats(const GameState& s) { return static_cast<int>(s.stacks.size()); }

void CheckSeat(const GameState& s, int player) {
  if (player < 0 || player >= Seats(s)) {
    Fail(ErrorCode::kIllegalState, "no seat " + std::to_string(player));
  }
}

void CheckDeck(const GameState& s, std::size_t n) {
  if (s.deck.size() < n) {
    Fail(ErrorCode::kIllegalState, "deck holds " + std::to_string(s.deck.size()) + " cards, " +
                                       std::to_string(n) + " needed");
  }
}

bool Contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

std::vector<int> SeatsFrom(int num_players, int from) {
  std::vector<int> out;
  for (int i = 0; i < num_players; ++i) out.push_back(((from + i) % num_players + num_players) % num_players);
  return out;
}

std::vector<int> Unfolded(const GameState& state) {
  std::vector<int> out;
  for (int p = 0; p < Seats(state); ++p) {
    if (!state.IsFolded(p)) out.push_back(p);
  }
  return out;
}

void CoreShuffle(GameState& state, std::uint64_t seed) {
  Rng rng(seed);
  rng.Shuffle(state.deck);
  state.flow_cache.push_back({StepKind::kShuffle, 0});
}

void CorePostBlinds(const GameSpec& spec, GameState& state) {
  const int n = Seats(state);
  if (n < 2) Fail(ErrorCode::kIllegalState, "blinds need two seats");
  const std::pair<int, Chips> posts[2] = {{(state.button + 1) % n, spec.small_blind},
                                          {(state.button + 2) % n, spec.big_blind}};
  for (const auto& [seat, blind] : posts) {
    Chips paid = std::min(blind, state.stacks[seat]);
    state.stacks[seat] -= paid;
    state.street_bets[seat] += paid;
    if (state.stacks[seat] == 0 && !state.IsAllIn(seat)) {
      state.all_in.push_back(seat);
      std::sort(state.all_in.begin(), state.all_in.end());
    }
  }
  state.flow_cache.push_back({StepKind::kBlind, 0});
}

void CoreDeal(const GameSpec& spec, GameState& state, int n, const std::optional<std::vector<int>>& to) {
  (void)spec;
  if (n < 0) Fail(ErrorCode::kIllegalState, "negative deal count");
  std::vector<int> order;
  for (int p : SeatsFrom(Seats(state), state.button + 1)) {
    if (!to || Contains(*to, p)) order.push_back(p);
  }
  if (to) {
    for (int p : *to) CheckSeat(state, p);
  }
  CheckDeck(state, static_cast<std::size_t>(n) * order.size());
  if (state.hole.size() != static_cast<std::size_t>(Seats(state))) state.hole.resize(Seats(state));
  std::size_t top = 0;
  for (int r = 0; r < n; ++r) {
    for (int p : order) state.hole[p].push_back(state.deck[top++]);
  }
  state.deck.erase(state.deck.begin(), state.deck.begin() + static_cast<std::ptrdiff_t>(top));
  if (!to) state.flow_cache.push_back({StepKind::kDeal, n});
}

void CoreFlop(GameState& state, int n) {
  if (n < 0) Fail(ErrorCode::kIllegalState, "negative flop count");
  CheckDeck(state, n);
  state.community.insert(state.community.end(), state.deck.begin(), state.deck.begin() + n);
  state.deck.erase(state.deck.begin(), state.deck.begin() + n);
  state.flow_cache.push_back({StepKind::kFlop, n});
}

void CoreSortHand(const GameSpec& spec, GameState& state, int player) {
  CheckSeat(state, player);
  SortCanonical(spec, state.hole[player]);
}

void CoreRankHands(const GameSpec& spec, GameState& state, int strategy) {
  if (strategy < 0 || strategy >= static_cast<int>(spec.strategies.size())) {
    Fail(ErrorCode::kIllegalState, "no strategy " + std::to_string(strategy));
  }
  std::vector<ShowdownEntry> added;
  for (int p : Unfolded(state)) {
    try {
      RankedHand h = BestHand(spec, spec.strategies[strategy], state.hole[p], state.community);
      added.push_back({p, strategy, h.name, h.cards});
    } catch (const Error& e) {
      Fail(ErrorCode::kIllegalState, std::string("seat ") + std::to_string(p) + ": " + e.what());
    }
  }
  state.showdown.insert(state.showdown.end(), added.begin(), added.end());
}

std::vector<Pot> BuildSidePots(const std::vector<Chips>& contributions, const std::vector<int>& all_in,
                               const std::vector<int>& folded) {
  const int n = static_cast<int>(contributions.size());
  std::vector<Chips> levels;
  Chips top = 0;
  for (int p = 0; p < n; ++p) {
    top = std::max(top, contributions[p]);
    if (Contains(all_in, p) && !Contains(folded, p)) levels.push_back(contributions[p]);
  }
  levels.push_back(top);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<Pot> pots;
  Chips prev = 0;
  for (Chips level : levels) {
    Pot pot;
    for (int p = 0; p < n; ++p) {
      pot.amount += std::min(contributions[p], level) - std::min(contributions[p], prev);
      bool live = !Contains(folded, p);
      if (live && (contributions[p] >= level || !Contains(all_in, p))) pot.eligible.push_back(p);
    }
    prev = level;
    if (pot.amount == 0) continue;
    if (pot.eligible.empty()) {
      if (!pots.empty()) {
        pots.back().amount += pot.amount;
        continue;
      }
      for (int p = 0; p < n; ++p) {
        if (!Contains(folded, p)) pot.eligible.push_back(p);
      }
    }
    pots.push_back(std::move(pot));
  }
  return pots;
}

void CoreCollectBets(GameState& state) {
  for (auto& pot : BuildSidePots(state.street_bets, state.all_in, state.folded)) {
    if (!state.pots.empty() && state.pots.back().eligible == pot.eligible) {
      state.pots.back().amount += pot.amount;
    } else {
      state.pots.push_back(std::move(pot));
    }
  }
  std::fill(state.street_bets.begin(), state.street_bets.end(), 0);
  state.raises = 0;
}

void CoreNextActor(GameState& state) {
  if (state.pending.empty()) Fail(ErrorCode::kIllegalState, "nobody is waiting to act");
  state.pending.erase(state.pending.begin());
  if (state.pending.empty()) {
    state.current_actor.reset();
  } else {
    state.current_actor = state.pending.front();
  }
}

void CoreDiscard(GameState& state, int player, const Cards& cards) {
  CheckSeat(state, player);
  Cards hole = state.hole[player];
  for (const auto& c : cards) {
    auto it = std::find(hole.begin(), hole.end(), c);
    if (it == hole.end()) Fail(ErrorCode::kIllegalState, "seat " + std::to_string(player) + " does not hold " + c.token);
    hole.erase(it);
  }
  state.hole[player] = std::move(hole);
  auto& pile = state.discards[player];
  pile.insert(pile.end(), cards.begin(), cards.end());
}

void CoreDraw(GameState& state, int player, int n) {
  CheckSeat(state, player);
  if (n < 0) Fail(ErrorCode::kIllegalState, "negative draw count");
  CheckDeck(state, n);
  auto& hole = state.hole[player];
  hole.insert(hole.end(), state.deck.begin(), state.deck.begin() + n);
  state.deck.erase(state.deck.begin(), state.deck.begin() + n);
}

void CoreRecycle(GameState& state, std::uint64_t seed) {
  Cards pile;
  for (auto& d : state.discards) {
    pile.insert(pile.end(), d.begin(), d.end());
    d.clear();
  }
  Rng rng(seed);
  rng.Shuffle(pile);
  state.deck.insert(state.deck.end(), pile.begin(), pile.end());
}

std::vector<Chips> DistributePrize(const GameSpec& spec, const std::vector<Pot>& pots,
                                   const std::vector<StrategyRanking>& rankings, int button) {
  const int n = spec.num_players;
  std::vector<Chips> pay(n, 0);
  auto give = [&](Chips amount, std::vector<int> winners) {
    // Odd chips go one each from the seat left of the button.
    std::sort(winners.begin(), winners.end(), [&](int a, int b) {
      return (a - button - 1 + 2 * n) % n < (b - button - 1 + 2 * n) % n;
    });
    const Chips each = amount / static_cast<Chips>(winners.size());
    Chips odd = amount % static_cast<Chips>(winners.size());
    for (int w : winners) {
      pay[w] += each + (odd > 0 ? 1 : 0);
      if (odd > 0) --odd;
    }
  };
  for (const auto& pot : pots) {
    std::vector<std::pair<int, std::vector<int>>> sharing;  // strategy, qualifying seats
    for (std::size_t s = 0; s < rankings.size() && s < spec.strategies.size(); ++s) {
      std::vector<int> seats;
      for (int p : pot.eligible) {
        if (p < static_cast<int>(rankings[s].size()) && rankings[s][p] &&
            Qualifies(spec, spec.strategies[s], *rankings[s][p])) {
          seats.push_back(p);
        }
      }
      if (!seats.empty()) sharing.push_back({static_cast<int>(s), seats});
    }
    if (sharing.empty()) {
      give(pot.amount, pot.eligible);
      continue;
    }
    const Chips k = static_cast<Chips>(sharing.size());
    for (std::size_t i = 0; i < sharing.size(); ++i) {
      const Chips share = pot.amount / k + (i == 0 ? pot.amount % k : 0);
      const auto& [s, seats] = sharing[i];
      const auto& st = spec.strategies[s];
      std::vector<int> best = {seats[0]};
      for (std::size_t j = 1; j < seats.size(); ++j) {
        auto cmp = CompareHands(*rankings[s][seats[j]], *rankings[s][best[0]], st);
        if (cmp == std::strong_ordering::greater) {
          best = {seats[j]};
        } else if (cmp == std::strong_ordering::equal) {
          best.push_back(seats[j]);
        }
      }
      give(share, best);
    }
  }
  return pay;
}

void CoreAward(const GameSpec& spec, GameState& state) {
  for (Chips b : state.street_bets) {
    if (b != 0) Fail(ErrorCode::kIllegalState, "bets are still on the table");
  }
  const int n = Seats(state);
  std::vector<int> live = Unfolded(state);
  if (live.empty()) Fail(ErrorCode::kIllegalState, "every seat folded");
  std::vector<Chips> pay(n, 0);
  if (live.size() == 1) {
    for (const auto& pot : state.pots) pay[live[0]] += pot.amount;
  } else {
    std::vector<StrategyRanking> rankings(spec.strategies.size(), StrategyRanking(n));
    for (std::size_t s = 0; s < spec.strategies.size(); ++s) {
      for (int p : live) {
        try {
          rankings[s][p] = BestHand(spec, spec.strategies[s], state.hole[p], state.community);
        } catch (const Error& e) {
          Fail(ErrorCode::kIllegalState, std::string("seat ") + std::to_string(p) + ": " + e.what());
        }
      }
    }
    pay = DistributePrize(spec, state.pots, rankings, state.button);
  }
  for (int p = 0; p < n; ++p) state.stacks[p] += pay[p];
  state.pots.clear();
  state.all_in.clear();
  state.flow_cache.push_back({StepKind::kPrize, 0});
}

}  // namespace pokerforge
