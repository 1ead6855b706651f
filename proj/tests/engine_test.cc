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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "engine/core_ops.h"
#include "engine/engine.h"
#include "script/presets.h"
#include "script/script.h"
#include "test_util.h"

namespace pokerforge {
namespace {

// Runs automatic steps until someone must act or the round ends.
GameState Auto(const GameSpec& spec, GameState s) {
  while (!s.IsTerminal() && !s.current_actor) s = Step(spec, s, PlayerInput::None()).next;
  return s;
}

GameState Act(const GameSpec& spec, const GameState& s, const std::string& input) {
  return Step(spec, s, ParseInput(input)).next;
}

Chips TotalChips(const GameState& s) {
  Chips t = 0;
  for (Chips c : s.stacks) t += c;
  for (Chips c : s.street_bets) t += c;
  for (const auto& p : s.pots) t += p.amount;
  return t;
}

std::map<std::string, int> Multiset(const GameState& s) {
  std::map<std::string, int> m;
  auto add = [&](const Cards& cs) {
    for (const auto& c : cs) ++m[c.token];
  };
  add(s.deck);
  add(s.community);
  for (const auto& h : s.hole) add(h);
  for (const auto& d : s.discards) add(d);
  return m;
}

TEST(InitRound, FreshState) {
  for (const auto& name : PresetNames()) {
    GameSpec spec = LoadPreset(name);
    GameState s = InitRound(spec, 0);
    EXPECT_EQ(s.flow_cache, std::vector<FlowStep>{spec.flow.front()}) << name;
    EXPECT_EQ(s.deck, CanonicalDeck(spec)) << name;
    EXPECT_TRUE(s.pots.empty());
    EXPECT_EQ(TotalChips(s), spec.TotalChips());
    EXPECT_EQ(InitRound(spec, 0), s);
    EXPECT_TRUE(ValidateState(spec, s).empty()) << name;
  }
  std::string text = SerializeState(InitRound(LoadPreset("texas"), 0));
  EXPECT_LT(text.find("\ndeck:"), text.find("\nhole:"));
  EXPECT_LT(text.find("\ncommunity:"), text.find("\nmessage:"));
}

TEST(InitRound, InvalidSpec) {
  GameSpec spec = LoadPreset("texas");
  spec.num_players = 1;
  EXPECT_THROW(InitRound(spec, 0), Error);
}

TEST(Inputs, Roundtrip) {
  for (const char* text : {"none", "2 raise 10", "0 call", "1 discard H3 D4", "1 discard", "3 all_in",
                           "4 fold", "5 check"}) {
    EXPECT_EQ(RenderInput(ParseInput(text)), text);
  }
  EXPECT_THROW(ParseInput("2 dance"), Error);
  EXPECT_THROW(ParseInput("x call"), Error);
}

TEST(LegalActions, NobodyToAct) {
  GameSpec spec = LoadPreset("texas");
  EXPECT_TRUE(LegalActions(spec, InitRound(spec, 0)).empty());
}

TEST(LegalActions, FacingABet) {
  GameSpec spec = LoadPreset("texas");
  GameState s = Auto(spec, InitRound(spec, 0));
  ASSERT_TRUE(s.current_actor);
  const int p = *s.current_actor;
  ASSERT_GT(ToCall(s, p), 0);
  auto legal = LegalActions(spec, s);
  std::map<ActionKind, int> kinds;
  Chips lo = 1 << 30, hi = 0;
  for (const auto& a : legal) {
    ++kinds[a.kind];
    if (a.kind == ActionKind::kRaise) {
      lo = std::min(lo, a.amount);
      hi = std::max(hi, a.amount);
    }
  }
  EXPECT_EQ(kinds[ActionKind::kCheck], 0);
  EXPECT_EQ(kinds[ActionKind::kCall], 1);
  EXPECT_EQ(kinds[ActionKind::kFold], 1);
  EXPECT_EQ(lo, spec.min_bet);
  EXPECT_EQ(hi, spec.max_bet);
  // A deep stack cannot shove past the bet limit.
  EXPECT_EQ(kinds[ActionKind::kAllIn], 0);
  // A short stack can.
  s.stacks[p] = 15;
  s.stacks[(p + 1) % spec.num_players] += spec.starting_stack - 15;
  kinds.clear();
  for (const auto& a : LegalActions(spec, s)) ++kinds[a.kind];
  EXPECT_EQ(kinds[ActionKind::kAllIn], 1);
  EXPECT_EQ(kinds[ActionKind::kCall], 1);
  EXPECT_EQ(kinds[ActionKind::kFold], 1);
  EXPECT_GT(kinds[ActionKind::kRaise], 0);
}

TEST(LegalActions, SwitchSubsets) {
  GameSpec spec = LoadPreset("27-single-draw");
  for (auto& st : spec.flow) {
    if (st.kind == StepKind::kSwitch) st.count = 3;
  }
  GameState s = Auto(spec, InitRound(spec, 1));
  // Everybody calls or checks through the first betting round.
  while (NextStep(spec, s)->kind == StepKind::kBet) {
    auto legal = LegalActions(spec, s);
    auto it = std::find_if(legal.begin(), legal.end(), [](const PlayerInput& a) {
      return a.kind == ActionKind::kCall || a.kind == ActionKind::kCheck;
    });
    s = Auto(spec, Step(spec, s, *it).next);
  }
  ASSERT_EQ(NextStep(spec, s)->kind, StepKind::kSwitch);
  ASSERT_EQ(s.hole[*s.current_actor].size(), 5u);
  // C(5,0) + C(5,1) + C(5,2) + C(5,3).
  EXPECT_EQ(LegalActions(spec, s).size(), 26u);
}

TEST(Step, RaiseUpdatesChipsAndDirectsNextActor) {
  GameSpec spec = LoadPreset("texas");
  spec.num_players = 4;
  // Seed 3 puts the button on seat 3: blinds 0 and 1, seat 2 opens.
  GameState s = Auto(spec, InitRound(spec, 3));
  ASSERT_EQ(s.button, 3);
  ASSERT_EQ(*s.current_actor, 2);
  s = Act(spec, s, "2 call");
  s = Act(spec, s, "3 fold");
  s = Act(spec, s, "0 fold");
  s = Auto(spec, Act(spec, s, "1 check"));
  ASSERT_EQ(s.community.size(), 3u);
  ASSERT_EQ(*s.current_actor, 1);
  s = Act(spec, s, "1 check");
  GameState before = s;
  StepResult r = Step(spec, s, ParseInput("2 raise 10"));
  EXPECT_EQ(r.next.stacks[2], before.stacks[2] - 10);
  EXPECT_EQ(r.next.street_bets[2], 10);
  EXPECT_EQ(r.next.current_actor, 1);
  ASSERT_FALSE(r.next.messages.empty());
  EXPECT_EQ(r.next.messages.back().target, 1);
  EXPECT_EQ(r.next.messages.back().text, "your turn to bet");
  EXPECT_EQ(r.next.messages.front().text, "player 2 raises 10");
  // The diff touches only betting keys.
  std::vector<std::string> touched;
  for (const auto& op : r.diff.ops) {
    ASSERT_EQ(op.kind, OpKind::kSet);
    touched.push_back(std::string(StateSchema()[op.path.key].name));
  }
  for (const auto& key : touched) {
    EXPECT_TRUE(key == "stacks" || key == "street_bets" || key == "current_actor" || key == "pending" ||
                key == "raises" || key == "message")
        << key;
  }
  EXPECT_EQ(Merge(spec, before, r.diff), r.next);
}

TEST(Step, EveryoneFoldsToTheBigBlind) {
  GameSpec spec = LoadPreset("texas");
  GameState s = Auto(spec, InitRound(spec, 0));
  const int bb = (s.button + 2) % spec.num_players;
  while (s.current_actor && *s.current_actor != bb) {
    s = Act(spec, s, std::to_string(*s.current_actor) + " fold");
  }
  ASSERT_EQ(Unfolded(s).size(), 1u);
  EXPECT_EQ(s.flow_cache.back().kind, StepKind::kBet);
  EXPECT_EQ(*NextStep(spec, s), (FlowStep{StepKind::kPrize, 0}));
  StepResult r = Step(spec, s, PlayerInput::None());
  EXPECT_EQ(r.category, StepKind::kPrize);
  EXPECT_TRUE(r.next.IsTerminal());
  EXPECT_EQ(r.next.stacks[bb], spec.starting_stack + spec.small_blind);
  EXPECT_TRUE(r.next.showdown.empty());
  EXPECT_TRUE(ValidateState(spec, r.next).empty());
  EXPECT_EQ(r.next.messages.front().text, "player " + std::to_string(bb) + " wins 3");
}

TEST(Step, ShuffleIsOneCoreCall) {
  GameSpec spec = LoadPreset("texas");
  GameState s = Step(spec, InitRound(spec, 0), PlayerInput::None()).next;
  ASSERT_EQ(NextStep(spec, s)->kind, StepKind::kShuffle);
  StepResult r = Step(spec, s, PlayerInput::None());
  ASSERT_EQ(r.diff.ops.size(), 1u);
  EXPECT_EQ(r.diff.ops[0].kind, OpKind::kCall);
  EXPECT_EQ(r.diff.ops[0].fn, "shuffle");
  EXPECT_EQ(Multiset(r.next), Multiset(s));
  EXPECT_NE(r.next.deck, s.deck);
}

TEST(Step, IllegalActionLeavesStateAlone) {
  GameSpec spec = LoadPreset("texas");
  GameState s = Auto(spec, InitRound(spec, 0));
  const int p = *s.current_actor;
  const GameState copy = s;
  for (std::string bad : {std::to_string(p) + " check", std::to_string(p) + " raise 500",
                          std::to_string((p + 1) % 6) + " call", std::string("none")}) {
    try {
      Step(spec, s, ParseInput(bad));
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kIllegalAction);
    }
    EXPECT_EQ(s, copy);
  }
  EXPECT_THROW(Step(spec, InitRound(spec, 0), ParseInput("0 call")), Error);
}

TEST(SidePots, NoAllIn) {
  auto pots = BuildSidePots({10, 10, 10, 0}, {}, {3});
  ASSERT_EQ(pots.size(), 1u);
  EXPECT_EQ(pots[0], (Pot{30, {0, 1, 2}}));
}

TEST(SidePots, LayeredAllIns) {
  // Independent oracle: walk ascending contribution levels.
  std::vector<Chips> c = {10, 20, 30};
  auto pots = BuildSidePots(c, {0, 1, 2}, {});
  std::vector<Pot> want;
  Chips prev = 0;
  std::vector<Chips> levels = c;
  std::sort(levels.begin(), levels.end());
  for (Chips level : levels) {
    Pot pot;
    for (int p = 0; p < 3; ++p) {
      if (c[p] >= level) {
        pot.eligible.push_back(p);
      }
      pot.amount += std::max<Chips>(0, std::min(c[p], level) - prev);
    }
    want.push_back(pot);
    prev = level;
  }
  EXPECT_EQ(pots, want);
  EXPECT_EQ(pots, (std::vector<Pot>{{30, {0, 1, 2}}, {20, {1, 2}}, {10, {2}}}));
}

TEST(SidePots, EqualContributions) {
  auto pots = BuildSidePots({25, 25, 25}, {0, 1, 2}, {});
  ASSERT_EQ(pots.size(), 1u);
  EXPECT_EQ(pots[0].amount, 75);
}

RankedHand Rank(const GameSpec& spec, int s, const std::string& cards) {
  return ClassifyHand(spec, spec.strategies[s], ParseCards(cards));
}

TEST(DistributePrize, SingleWinner) {
  GameSpec spec = LoadPreset("texas");
  std::vector<StrategyRanking> r(1, StrategyRanking(6));
  r[0][1] = Rank(spec, 0, "HA DA CA SA H2");
  r[0][4] = Rank(spec, 0, "H3 D3 C5 S7 H9");
  auto pay = DistributePrize(spec, {{120, {1, 4}}}, r, 0);
  EXPECT_EQ(pay[1], 120);
  EXPECT_EQ(pay[4], 0);
}

TEST(DistributePrize, OddChipLeftOfButton) {
  GameSpec spec = LoadPreset("texas");
  std::vector<StrategyRanking> r(1, StrategyRanking(6));
  r[0][1] = Rank(spec, 0, "HA DK CQ SJ H9");
  r[0][4] = Rank(spec, 0, "DA CK SQ HJ D9");
  // Button 3: seat 4 is first left of it.
  auto pay = DistributePrize(spec, {{101, {1, 4}}}, r, 3);
  EXPECT_EQ(pay[4], 51);
  EXPECT_EQ(pay[1], 50);
  pay = DistributePrize(spec, {{101, {1, 4}}}, r, 0);
  EXPECT_EQ(pay[1], 51);
  EXPECT_EQ(pay[4], 50);
}

TEST(DistributePrize, HiLoWithoutQualifyingLow) {
  GameSpec spec = LoadPreset("omaha-hl");
  std::vector<StrategyRanking> r(2, StrategyRanking(6));
  r[0][0] = Rank(spec, 0, "HK DK CQ SJ H9");
  r[0][2] = Rank(spec, 0, "HA DA CQ SJ H9");
  r[1][0] = Rank(spec, 1, "HK DK CQ SJ H9");
  r[1][2] = Rank(spec, 1, "HA DA CQ SJ H9");
  auto pay = DistributePrize(spec, {{100, {0, 2}}}, r, 0);
  EXPECT_EQ(pay[2], 100);
  // With a qualifying low on seat 0 the pot splits.
  r[1][0] = Rank(spec, 1, "H2 D3 C4 S5 H7");
  pay = DistributePrize(spec, {{101, {0, 2}}}, r, 0);
  EXPECT_EQ(pay[2], 51);
  EXPECT_EQ(pay[0], 50);
}

struct RoundCheck {
  int transitions = 0;
  int violations = 0;
  int diff_failures = 0;
};

RoundCheck CheckRound(const GameSpec& spec, std::int64_t seed) {
  RoundCheck out;
  RoundLog log = RunRound(spec, seed, RandomPolicies(spec, seed));
  for (const auto& t : log.transitions) {
    ++out.transitions;
    if (!ValidateState(spec, t.next).empty()) ++out.violations;
    if (!t.prev.IsBlank() && (Multiset(t.prev) != Multiset(t.next) || TotalChips(t.prev) != TotalChips(t.next))) {
      ++out.violations;
    }
    if (!(Merge(spec, t.prev, t.diff) == t.next)) ++out.diff_failures;
    if (!(Merge(spec, t.prev, ComputeDiff(t.prev, t.next)) == t.next)) ++out.diff_failures;
  }
  EXPECT_TRUE(log.transitions.back().next.IsTerminal());
  return out;
}

TEST(RunRound, PresetsCompleteCleanly) {
  for (const auto& name : PresetNames()) {
    GameSpec spec = LoadPreset(name);
    for (int seed = 0; seed < 5; ++seed) {
      RoundCheck c = CheckRound(spec, seed);
      EXPECT_EQ(c.violations, 0) << name << " seed " << seed;
      EXPECT_EQ(c.diff_failures, 0) << name << " seed " << seed;
    }
  }
}

TEST(RunRound, GameFilesCompleteCleanly) {
  for (const char* file : {"three_card_draw.game", "six_card_draw.game", "odd_lover.game",
                           "joker_holdem.game", "stardust.game", "dragonie.game", "three_kingdoms.game"}) {
    GameSpec spec = ParseScript(ReadGame(file));
    for (int seed = 0; seed < 3; ++seed) {
      RoundCheck c = CheckRound(spec, seed);
      EXPECT_EQ(c.violations, 0) << file;
      EXPECT_EQ(c.diff_failures, 0) << file;
    }
  }
}

TEST(RunRound, Deterministic) {
  GameSpec spec = LoadPreset("omaha-hl");
  RoundLog a = RunRound(spec, 42, RandomPolicies(spec, 42));
  RoundLog b = RunRound(spec, 42, RandomPolicies(spec, 42));
  ASSERT_EQ(a.transitions.size(), b.transitions.size());
  for (std::size_t i = 0; i < a.transitions.size(); ++i) {
    EXPECT_EQ(a.transitions[i].next, b.transitions[i].next);
    EXPECT_EQ(a.transitions[i].diff, b.transitions[i].diff);
  }
}

// Replaying from any serialized intermediate state reaches the same end.
TEST(RunRound, MarkovReplay) {
  GameSpec spec = LoadPreset("badacey");
  RoundLog log = RunRound(spec, 7, RandomPolicies(spec, 7));
  const GameState& end = log.transitions.back().next;
  for (std::size_t from = 0; from < log.transitions.size(); from += 3) {
    GameState s = ParseState(SerializeState(log.transitions[from].prev));
    for (std::size_t i = from; i < log.transitions.size(); ++i) s = Step(spec, s, log.transitions[i].input).next;
    EXPECT_EQ(s, end) << "from " << from;
  }
}

}  // namespace
}  // namespace pokerforge
