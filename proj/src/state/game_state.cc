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

#include "state/game_state.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "common/strings.h"
#include "state/record.h"

namespace pokerforge {
namespace {

bool Contains(const std::vector<int>& ids, int p) {
  return std::find(ids.begin(), ids.end(), p) != ids.end();
}

Cards Hidden(std::size_t n) { return Cards(n, Card{std::string(kHiddenToken)}); }

}  // namespace

bool GameState::IsFolded(int p) const { return Contains(folded, p); }
bool GameState::IsAllIn(int p) const { return Contains(all_in, p); }

GameState BlankState(std::int64_t seed) {
  GameState s;
  s.seed = seed;
  return s;
}

std::string SerializeState(const GameState& state) {
  Record record = ToRecord(state);
  const auto& schema = StateSchema();
  std::string out(kStateHeader);
  out += "\n";
  for (std::size_t i = 0; i < schema.size(); ++i) {
    std::string value = RenderValue(*schema[i].type, record[i]);
    out += std::string(schema[i].name) + ":";
    if (!value.empty()) out += " " + value;
    out += "\n";
  }
  return out;
}

GameState ParseState(std::string_view text) {
  const auto& schema = StateSchema();
  auto lines = SplitLines(text);
  std::size_t i = 0;
  while (i < lines.size() && Trim(lines[i]).empty()) ++i;
  if (i == lines.size() || Trim(lines[i]) != kStateHeader) {
    Fail(ErrorCode::kMalformedState, "missing '" + std::string(kStateHeader) + "' header",
         static_cast<int>(i) + 1);
  }
  Record record(schema.size());
  std::vector<bool> seen(schema.size(), false);
  for (++i; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    std::string_view line = lines[i];
    if (Trim(line).empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      Fail(ErrorCode::kMalformedState, "expected 'key: value'", lineno);
    }
    std::string key(Trim(line.substr(0, colon)));
    auto idx = KeyIndex(key);
    if (!idx) Fail(ErrorCode::kUnknownKey, "unknown key '" + key + "'", lineno);
    if (seen[*idx]) Fail(ErrorCode::kMalformedState, "duplicate key '" + key + "'", lineno);
    seen[*idx] = true;
    try {
      record[*idx] = ParseValue(*schema[*idx].type, line.substr(colon + 1));
    } catch (const Error& e) {
      Fail(ErrorCode::kMalformedState, key + ": " + e.what(), lineno);
    }
  }
  for (std::size_t k = 0; k < schema.size(); ++k) {
    if (!seen[k]) Fail(ErrorCode::kMalformedState, "missing key '" + std::string(schema[k].name) + "'");
  }
  return FromRecord(record);
}

GameState ViewForPlayer(const GameState& state, int player) {
  const int n = static_cast<int>(state.hole.size());
  if (player < 0 || player >= n) {
    Fail(ErrorCode::kUnknownPlayer, "no seat " + std::to_string(player));
  }
  GameState view = state;
  view.deck = Hidden(state.deck.size());
  for (int p = 0; p < n; ++p) {
    if (p == player) continue;
    view.hole[p] = Hidden(state.hole[p].size());
    if (p < static_cast<int>(view.discards.size())) view.discards[p] = Hidden(state.discards[p].size());
  }
  for (auto& e : view.showdown) {
    if (e.player != player) e.cards = Hidden(e.cards.size());
  }
  view.messages.clear();
  for (const auto& m : state.messages) {
    if (m.target == kAllPlayers || m.target == player) view.messages.push_back(m);
  }
  return view;
}

namespace {

class StateChecker {
 public:
  StateChecker(const GameSpec& spec, const GameState& state) : spec_(spec), s_(state) {}

  Violations Run() {
    if (s_.IsBlank()) {
      CheckBlank();
      return std::move(out_);
    }
    if (!CheckShape()) return std::move(out_);
    CheckCards();
    CheckChips();
    CheckPlayers();
    CheckFlow();
    return std::move(out_);
  }

 private:
  void Add(std::string code, std::string message) {
    out_.push_back(Violation{std::move(code), std::move(message)});
  }

  void CheckBlank() {
    if (!s_.deck.empty() || !s_.hole.empty() || !s_.community.empty() || !s_.discards.empty() ||
        !s_.stacks.empty() || !s_.street_bets.empty() || !s_.pots.empty() || s_.current_actor ||
        !s_.pending.empty() || s_.raises != 0 || !s_.folded.empty() || !s_.all_in.empty() ||
        !s_.showdown.empty() || !s_.messages.empty() || s_.button != 0) {
      Add("Shape", "pre-round state must be empty apart from the seed");
    }
    if (s_.seed < 0) Add("Shape", "seed must be non-negative");
  }

  bool CheckShape() {
    const std::size_t n = static_cast<std::size_t>(spec_.num_players);
    bool ok = true;
    auto need = [&](std::size_t size, const char* key) {
      if (size != n) {
        Add("Shape", std::string(key) + " must have one entry per player");
        ok = false;
      }
    };
    need(s_.hole.size(), "hole");
    need(s_.discards.size(), "discards");
    need(s_.stacks.size(), "stacks");
    need(s_.street_bets.size(), "street_bets");
    return ok;
  }

  void CheckCards() {
    std::map<std::string, int> expected;
    for (const auto& c : CanonicalDeck(spec_)) ++expected[c.token];
    std::map<std::string, int> actual;
    auto count = [&](const Cards& cards) {
      for (const auto& c : cards) {
        if (!DecodeCard(spec_, c.token)) Add("UnknownCard", "token '" + c.token + "'");
        ++actual[c.token];
      }
    };
    count(s_.deck);
    for (const auto& h : s_.hole) count(h);
    count(s_.community);
    for (const auto& d : s_.discards) count(d);
    if (actual != expected) {
      std::vector<std::string> diffs;
      for (const auto& [tok, k] : actual) {
        int want = expected.count(tok) ? expected.at(tok) : 0;
        if (k != want) diffs.push_back(tok + " x" + std::to_string(k) + " (want " + std::to_string(want) + ")");
      }
      for (const auto& [tok, k] : expected) {
        if (!actual.count(tok)) diffs.push_back(tok + " missing");
      }
      Add("CardConservation", Join(diffs, ", "));
    }
  }

  void CheckChips() {
    Chips total = 0;
    for (std::size_t p = 0; p < s_.stacks.size(); ++p) {
      if (s_.stacks[p] < 0) Add("NegativeChips", "stack of seat " + std::to_string(p));
      if (s_.street_bets[p] < 0) Add("NegativeChips", "street bet of seat " + std::to_string(p));
      total += s_.stacks[p] + s_.street_bets[p];
    }
    for (const auto& pot : s_.pots) {
      if (pot.amount < 0) Add("NegativeChips", "pot " + RenderPot(pot));
      total += pot.amount;
      if (pot.eligible.empty()) Add("PotEligibility", "pot " + RenderPot(pot) + " has no eligible seat");
      for (int p : pot.eligible) {
        if (!ValidSeat(p)) Add("PotEligibility", "pot " + RenderPot(pot) + " names seat " + std::to_string(p));
        else if (s_.IsFolded(p)) Add("PotEligibility", "folded seat " + std::to_string(p) + " is eligible");
      }
    }
    if (total != spec_.TotalChips()) {
      Add("ChipConservation", "chips total " + std::to_string(total) + ", expected " +
                                  std::to_string(spec_.TotalChips()));
    }
  }

  bool ValidSeat(int p) const { return p >= 0 && p < spec_.num_players; }

  void CheckIdSet(const std::vector<int>& ids, const char* key, bool sorted) {
    for (int p : ids) {
      if (!ValidSeat(p)) Add("PlayerSet", std::string(key) + " names seat " + std::to_string(p));
    }
    if (std::set<int>(ids.begin(), ids.end()).size() != ids.size()) {
      Add("PlayerSet", std::string(key) + " repeats a seat");
    }
    if (sorted && !std::is_sorted(ids.begin(), ids.end())) {
      Add("PlayerSet", std::string(key) + " must be sorted");
    }
  }

  void CheckPlayers() {
    CheckIdSet(s_.folded, "folded", true);
    CheckIdSet(s_.all_in, "all_in", true);
    CheckIdSet(s_.pending, "pending", false);
    for (int p : s_.pending) {
      if (s_.IsFolded(p) || s_.IsAllIn(p)) {
        Add("ActorState", "pending seat " + std::to_string(p) + " cannot act");
      }
    }
    if (s_.current_actor) {
      int a = *s_.current_actor;
      if (!ValidSeat(a)) {
        Add("ActorState", "current actor " + std::to_string(a) + " is not a seat");
      } else if (s_.IsFolded(a) || s_.IsAllIn(a)) {
        Add("ActorState", "current actor " + std::to_string(a) + " is folded or all-in");
      }
      if (s_.pending.empty() || s_.pending.front() != a) {
        Add("ActorState", "current actor must head the pending list");
      }
    } else if (!s_.pending.empty()) {
      Add("ActorState", "pending seats without a current actor");
    }
    if (s_.raises < 0 || s_.raises > spec_.raise_cap + spec_.num_players) {
      Add("ActorState", "raise count out of range");
    }
    for (int p : s_.all_in) {
      if (ValidSeat(p) && s_.stacks[p] != 0) Add("ActorState", "all-in seat " + std::to_string(p) + " holds chips");
    }
    for (const auto& m : s_.messages) {
      if (m.target != kAllPlayers && !ValidSeat(m.target)) {
        Add("MessageTarget", "message to seat " + std::to_string(m.target));
      }
    }
    if (spec_.num_players > 0 && s_.button != static_cast<int>(s_.seed % spec_.num_players)) {
      Add("Button", "button must equal seed mod players");
    }
  }

  void CheckFlow() {
    const auto& cache = s_.flow_cache;
    const auto& flow = spec_.flow;
    // Either a prefix of the flow, or a prefix followed directly by prize
    // when everyone but one seat folded.
    bool prefix = cache.size() <= flow.size() && std::equal(cache.begin(), cache.end(), flow.begin());
    bool skipped = !prefix && cache.size() < flow.size() + 1 && cache.back().kind == StepKind::kPrize &&
                   std::equal(cache.begin(), cache.end() - 1, flow.begin());
    if (!prefix && !skipped) Add("FlowCache", "flow cache is not a prefix of the flow");
    if (skipped && spec_.num_players - static_cast<int>(s_.folded.size()) != 1) {
      Add("FlowCache", "flow skipped to prize while several seats remain");
    }
  }

  const GameSpec& spec_;
  const GameState& s_;
  Violations out_;
};

}  // namespace

Violations ValidateState(const GameSpec& spec, const GameState& state) {
  return StateChecker(spec, state).Run();
}

}  // namespace pokerforge
