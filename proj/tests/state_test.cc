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

#include "script/presets.h"
#include "state/game_state.h"
#include "state/record.h"
#include "test_util.h"

namespace pokerforge {
namespace {

// A hand-built mid-round Texas state: two hole cards each, a flop out.
GameState Sample(const GameSpec& spec) {
  GameState s;
  s.flow_cache = {{StepKind::kStart, 0}, {StepKind::kBlind, 0}, {StepKind::kShuffle, 0},
                  {StepKind::kDeal, 2}};
  s.seed = 13;
  s.button = 13 % spec.num_players;
  Cards deck = CanonicalDeck(spec);
  s.hole.resize(spec.num_players);
  s.discards.resize(spec.num_players);
  for (int p = 0; p < spec.num_players; ++p) {
    s.hole[p] = {deck.back()};
    deck.pop_back();
    s.hole[p].push_back(deck.back());
    deck.pop_back();
  }
  s.deck = deck;
  s.stacks.assign(spec.num_players, spec.starting_stack);
  s.street_bets.assign(spec.num_players, 0);
  s.stacks[2] -= 1;
  s.street_bets[2] = 1;
  s.stacks[3] -= 2;
  s.street_bets[3] = 2;
  s.current_actor = 4;
  s.pending = {4, 5, 0, 1, 2, 3};
  s.messages = {{kEngine, 4, "your turn to bet"}, {kEngine, kAllPlayers, "cards dealt"}};
  return s;
}

TEST(StateCodec, KeysInCanonicalOrder) {
  GameSpec spec = LoadPreset("texas");
  std::string text = SerializeState(Sample(spec));
  EXPECT_EQ(text.rfind(std::string(kStateHeader), 0), 0u);
  std::size_t last = 0;
  for (const auto& key : StateSchema()) {
    std::size_t at = text.find("\n" + std::string(key.name) + ":");
    ASSERT_NE(at, std::string::npos) << key.name;
    EXPECT_GT(at, last) << key.name;
    last = at;
  }
  EXPECT_NE(text.find("\ndeck:"), std::string::npos);
  EXPECT_NE(text.find("\nmessage:"), std::string::npos);
}

TEST(StateCodec, Roundtrip) {
  GameSpec spec = LoadPreset("texas");
  GameState s = Sample(spec);
  s.pots = {{30, {0, 1, 2}}, {20, {1, 2}}};
  s.showdown = {{1, 0, "Two Pair", ParseCards("H2 D2 C3 S3 HA")}};
  s.folded = {5};
  std::string text = SerializeState(s);
  EXPECT_EQ(ParseState(text), s);
  EXPECT_EQ(SerializeState(ParseState(text)), text);
  EXPECT_EQ(SerializeState(BlankState(9)), SerializeState(ParseState(SerializeState(BlankState(9)))));
}

TEST(StateCodec, DuplicateKeyIsMalformed) {
  GameSpec spec = LoadPreset("texas");
  std::string text = SerializeState(Sample(spec)) + "seed: 4\n";
  try {
    ParseState(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedState);
    EXPECT_GT(e.line(), 0);
  }
}

TEST(StateCodec, UnknownKey) {
  GameSpec spec = LoadPreset("texas");
  std::string text = SerializeState(Sample(spec)) + "chat: hi\n";
  try {
    ParseState(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownKey);
  }
}

TEST(StateCodec, HiddenRunsAreCompact) {
  GameState s = BlankState(0);
  s.hole = {Cards(4, Card{"?"}), ParseCards("H2 ? ? D3")};
  Record r = ToRecord(s);
  EXPECT_EQ(RenderValue(*StateSchema()[*KeyIndex("hole")].type, r[*KeyIndex("hole")]),
            "?4 | H2 ?2 D3");
}

TEST(ValidateState, SampleIsClean) {
  GameSpec spec = LoadPreset("texas");
  auto v = ValidateState(spec, Sample(spec));
  EXPECT_TRUE(v.empty()) << v.front().code << " " << v.front().message;
  EXPECT_TRUE(ValidateState(spec, BlankState(5)).empty());
}

TEST(ValidateState, DuplicatedCard) {
  GameSpec spec = LoadPreset("texas");
  GameState s = Sample(spec);
  s.hole[0][0] = s.deck.front();
  EXPECT_TRUE(HasViolation(ValidateState(spec, s), "CardConservation"));
}

TEST(ValidateState, MovedCardKeepsMultiset) {
  GameSpec spec = LoadPreset("texas");
  GameState s = Sample(spec);
  std::string text = SerializeState(s);
  // Move the first deck card to the community line by editing text.
  GameState edited = ParseState(text);
  edited.community.push_back(edited.deck.front());
  edited.deck.erase(edited.deck.begin());
  edited = ParseState(SerializeState(edited));
  EXPECT_FALSE(HasViolation(ValidateState(spec, edited), "CardConservation"));
}

TEST(ValidateState, NegativeStack) {
  GameSpec spec = LoadPreset("texas");
  GameState s = Sample(spec);
  s.stacks[0] = -5;
  s.stacks[1] += 5 + spec.starting_stack;
  auto v = ValidateState(spec, s);
  EXPECT_TRUE(HasViolation(v, "NegativeChips"));
  EXPECT_FALSE(HasViolation(v, "ChipConservation"));
}

TEST(ViewForPlayer, Redaction) {
  GameSpec spec = LoadPreset("texas");
  GameState s = Sample(spec);
  GameState view = ViewForPlayer(s, 4);
  EXPECT_EQ(view.hole[4], s.hole[4]);
  for (int p = 0; p < spec.num_players; ++p) {
    if (p == 4) continue;
    EXPECT_EQ(view.hole[p].size(), s.hole[p].size());
    for (const auto& c : view.hole[p]) EXPECT_TRUE(IsHidden(c));
  }
  for (const auto& c : view.deck) EXPECT_TRUE(IsHidden(c));
  ASSERT_EQ(view.messages.size(), 2u);
  EXPECT_EQ(ViewForPlayer(s, 0).messages.size(), 1u);
  std::string text = SerializeState(view);
  EXPECT_NE(text.find("deck: ?" + std::to_string(s.deck.size())), std::string::npos);
  EXPECT_EQ(ParseState(text), view);
  EXPECT_THROW(ViewForPlayer(s, 6), Error);
}

}  // namespace
}  // namespace pokerforge
