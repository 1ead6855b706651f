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

#include "script/game_spec.h"

#include <algorithm>

#include "common/strings.h"

namespace pokerforge {

std::string_view StepKindName(StepKind kind) {
  switch (kind) {
    case StepKind::kStart: return "start";
    case StepKind::kBlind: return "blind";
    case StepKind::kShuffle: return "shuffle";
    case StepKind::kDeal: return "deal";
    case StepKind::kBet: return "bet";
    case StepKind::kFlop: return "flop";
    case StepKind::kSwitch: return "switch";
    case StepKind::kShow: return "show";
    case StepKind::kPrize: return "prize";
  }
  return "?";
}

std::optional<StepKind> StepKindFromName(std::string_view name) {
  for (StepKind k : kAllStepKinds) {
    if (StepKindName(k) == name) return k;
  }
  return std::nullopt;
}

bool StepHasCount(StepKind kind) {
  return kind == StepKind::kDeal || kind == StepKind::kFlop ||
         kind == StepKind::kSwitch;
}

std::string RenderFlowStep(const FlowStep& step) {
  std::string out(StepKindName(step.kind));
  if (StepHasCount(step.kind)) out += " " + std::to_string(step.count);
  return out;
}

FlowStep ParseFlowStep(std::string_view text, int line) {
  auto words = SplitWords(text);
  if (words.empty()) Fail(ErrorCode::kMalformedFlow, "empty flow step", line);
  auto kind = StepKindFromName(ToLower(words[0]));
  if (!kind) {
    Fail(ErrorCode::kMalformedFlow, "unknown flow step '" + words[0] + "'", line);
  }
  FlowStep step{*kind, 0};
  if (StepHasCount(*kind)) {
    if (words.size() != 2) {
      Fail(ErrorCode::kMalformedFlow,
           "flow step '" + words[0] + "' needs a count", line);
    }
    auto n = ParseInt(words[1]);
    if (!n || *n < 0 || *n > 1000) {
      Fail(ErrorCode::kMalformedFlow, "bad count '" + words[1] + "'", line);
    }
    step.count = static_cast<int>(*n);
  } else if (words.size() != 1) {
    Fail(ErrorCode::kMalformedFlow,
         "flow step '" + words[0] + "' takes no count", line);
  }
  return step;
}

int GameSpec::DeckSize() const {
  int n = static_cast<int>(suit_spec.suits.size() *
                           value_spec.ordered_values.size());
  for (const auto& s : specials) n += s.count;
  return n;
}

std::optional<DecodedCard> DecodeCard(const GameSpec& spec,
                                      std::string_view token) {
  for (std::size_t i = 0; i < spec.specials.size(); ++i) {
    if (spec.specials[i].symbol == token) {
      return DecodedCard{-1, -1, static_cast<int>(i)};
    }
  }
  const auto& suits = spec.suit_spec.suits;
  const auto& values = spec.value_spec.ordered_values;
  for (std::size_t s = 0; s < suits.size(); ++s) {
    if (!StartsWith(token, suits[s])) continue;
    std::string_view rest = token.substr(suits[s].size());
    for (std::size_t v = 0; v < values.size(); ++v) {
      if (values[v] == rest) {
        return DecodedCard{static_cast<int>(s), static_cast<int>(v), -1};
      }
    }
  }
  return std::nullopt;
}

Card MakeCard(const GameSpec& spec, int suit, int value) {
  return Card{spec.suit_spec.suits[suit] + spec.value_spec.ordered_values[value]};
}

Cards CanonicalDeck(const GameSpec& spec) {
  Cards deck;
  deck.reserve(spec.DeckSize());
  const int num_values = static_cast<int>(spec.value_spec.ordered_values.size());
  for (int s = 0; s < static_cast<int>(spec.suit_spec.suits.size()); ++s) {
    for (int v = 0; v < num_values; ++v) deck.push_back(MakeCard(spec, s, v));
  }
  for (const auto& special : spec.specials) {
    for (int i = 0; i < special.count; ++i) deck.push_back(Card{special.symbol});
  }
  return deck;
}

int CanonicalOrder(const GameSpec& spec, const Card& card) {
  auto d = DecodeCard(spec, card.token);
  const int num_values = static_cast<int>(spec.value_spec.ordered_values.size());
  const int regular = static_cast<int>(spec.suit_spec.suits.size()) * num_values;
  if (!d) return regular + static_cast<int>(spec.specials.size()) + 1;
  if (d->IsSpecial()) return regular + d->special;
  return d->suit * num_values + d->value;
}

void SortCanonical(const GameSpec& spec, Cards& cards) {
  std::stable_sort(cards.begin(), cards.end(), [&](const Card& a, const Card& b) {
    return CanonicalOrder(spec, a) < CanonicalOrder(spec, b);
  });
}

}  // namespace pokerforge
