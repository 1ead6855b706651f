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

#include "diff/core_registry.h"

#include <algorithm>
#include <optional>

#include "common/error.h"
#include "common/strings.h"
#include "engine/core_ops.h"

namespace pokerforge {
namespace {

class ArgReader {
 public:
  ArgReader(const CoreFunction& fn, const CallArgs& args) : fn_(fn), args_(args) {
    for (const auto& a : args) {
      auto it = std::find_if(fn.params.begin(), fn.params.end(),
                             [&](const CoreParam& p) { return p.name == a.name; });
      if (it == fn.params.end()) Arity("unexpected argument '" + a.name + "'");
      if (std::count_if(args.begin(), args.end(), [&](const CallArg& b) { return b.name == a.name; }) > 1) {
        Arity("argument '" + a.name + "' given twice");
      }
    }
    for (const auto& p : fn.params) {
      if (!Find(p.name)) Arity("missing argument '" + p.name + "'");
    }
  }

  std::int64_t Int(const std::string& name) const {
    auto v = ParseInt(*Find(name));
    if (!v) Arity("argument '" + name + "' is not an integer");
    return *v;
  }

  Cards CardList(const std::string& name) const {
    Cards out;
    const std::string& text = *Find(name);
    if (text.empty()) return out;
    for (const auto& tok : Split(text, ",")) {
      if (tok.empty()) Arity("argument '" + name + "' has an empty card");
      out.push_back(Card{tok});
    }
    return out;
  }

  std::optional<std::vector<int>> Players(const std::string& name) const {
    const std::string& text = *Find(name);
    if (text == "all") return std::nullopt;
    std::vector<int> out;
    for (const auto& tok : Split(text, ",")) {
      auto v = ParseInt(tok);
      if (!v) Arity("argument '" + name + "' is not 'all' or a seat list");
      out.push_back(static_cast<int>(*v));
    }
    return out;
  }

 private:
  const std::string* Find(const std::string& name) const {
    for (const auto& a : args_) {
      if (a.name == name) return &a.value;
    }
    return nullptr;
  }

  [[noreturn]] void Arity(const std::string& msg) const {
    Fail(ErrorCode::kArityMismatch, fn_.name + ": " + msg);
  }

  const CoreFunction& fn_;
  const CallArgs& args_;
};

std::vector<CoreFunction> BuildRegistry() {
  using P = ParamKind;
  std::vector<CoreFunction> r;
  auto add = [&](std::string name, std::vector<CoreParam> params, std::string doc,
                 std::function<void(const GameSpec&, GameState&, const ArgReader&)> fn) {
    CoreFunction f{std::move(name), std::move(params), std::move(doc), nullptr};
    const CoreFunction copy = f;
    f.apply = [fn, copy](const GameSpec& spec, GameState& s, const CallArgs& args) {
      ArgReader reader(copy, args);
      fn(spec, s, reader);
    };
    r.push_back(std::move(f));
  };
  add("shuffle", {{"seed", P::kInt}},
      "Shuffle the deck with the given seed, then record the shuffle step.",
      [](const GameSpec&, GameState& s, const ArgReader& a) {
        CoreShuffle(s, static_cast<std::uint64_t>(a.Int("seed")));
      });
  add("post_blinds", {},
      "The two seats left of the button post the small and big blind, then record the blind step.",
      [](const GameSpec& spec, GameState& s, const ArgReader&) { CorePostBlinds(spec, s); });
  add("deal", {{"n", P::kInt}, {"to", P::kPlayers}},
      "Deal n cards to each listed player one by one, round-robin from the seat left of the "
      "button; a deal to all players records the deal step.",
      [](const GameSpec& spec, GameState& s, const ArgReader& a) {
        CoreDeal(spec, s, static_cast<int>(a.Int("n")), a.Players("to"));
      });
  add("flop", {{"n", P::kInt}},
      "Move n cards from the top of the deck to the community cards, then record the flop step.",
      [](const GameSpec&, GameState& s, const ArgReader& a) { CoreFlop(s, static_cast<int>(a.Int("n"))); });
  add("sort_hand", {{"player", P::kInt}}, "Sort a player's hole cards into deck order.",
      [](const GameSpec& spec, GameState& s, const ArgReader& a) {
        CoreSortHand(spec, s, static_cast<int>(a.Int("player")));
      });
  add("rank_hands", {{"strategy", P::kInt}},
      "Find each remaining player's best hand under a ranking strategy and add it to the showdown.",
      [](const GameSpec& spec, GameState& s, const ArgReader& a) {
        CoreRankHands(spec, s, static_cast<int>(a.Int("strategy")));
      });
  add("collect_bets", {}, "Move this street's bets into the pots, splitting side pots for all-in players.",
      [](const GameSpec&, GameState& s, const ArgReader&) { CoreCollectBets(s); });
  add("next_actor", {}, "Pass the turn to the next player still waiting to act.",
      [](const GameSpec&, GameState& s, const ArgReader&) { CoreNextActor(s); });
  add("discard", {{"player", P::kInt}, {"cards", P::kCards}},
      "Move the named cards from a player's hole to that player's discard pile.",
      [](const GameSpec&, GameState& s, const ArgReader& a) {
        CoreDiscard(s, static_cast<int>(a.Int("player")), a.CardList("cards"));
      });
  add("draw", {{"player", P::kInt}, {"n", P::kInt}},
      "Move n cards from the top of the deck to the end of a player's hole.",
      [](const GameSpec&, GameState& s, const ArgReader& a) {
        CoreDraw(s, static_cast<int>(a.Int("player")), static_cast<int>(a.Int("n")));
      });
  add("recycle", {{"seed", P::kInt}},
      "Shuffle every discard pile with the given seed and put the cards under the deck.",
      [](const GameSpec&, GameState& s, const ArgReader& a) {
        CoreRecycle(s, static_cast<std::uint64_t>(a.Int("seed")));
      });
  add("award", {}, "Pay every pot to its winners, then record the prize step.",
      [](const GameSpec& spec, GameState& s, const ArgReader&) { CoreAward(spec, s); });
  return r;
}

std::string_view KindName(ParamKind k) {
  switch (k) {
    case ParamKind::kInt: return "int";
    case ParamKind::kCards: return "cards";
    case ParamKind::kPlayers: return "players";
  }
  return "?";
}

}  // namespace

const std::vector<CoreFunction>& CoreRegistry() {
  static const std::vector<CoreFunction> registry = BuildRegistry();
  return registry;
}

const CoreFunction* FindCoreFunction(std::string_view name) {
  for (const auto& f : CoreRegistry()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

std::string CoreSignature(const CoreFunction& fn) {
  std::string out = fn.name + "(";
  for (std::size_t i = 0; i < fn.params.size(); ++i) {
    if (i) out += ", ";
    out += fn.params[i].name + ": " + std::string(KindName(fn.params[i].kind));
  }
  return out + ")";
}

std::string CoreManifest() {
  std::string out;
  for (const auto& f : CoreRegistry()) out += CoreSignature(f) + "  " + f.doc + "\n";
  return out;
}

GameState InvokeCore(const GameSpec& spec, std::string_view name, const CallArgs& args,
                     const GameState& state) {
  const CoreFunction* fn = FindCoreFunction(name);
  if (!fn) Fail(ErrorCode::kUnknownCoreFn, "unknown core function '" + std::string(name) + "'");
  GameState next = state;
  fn->apply(spec, next, args);
  return next;
}

std::string RenderCardArg(const Cards& cards) {
  std::vector<std::string> toks;
  for (const auto& c : cards) toks.push_back(c.token);
  return Join(toks, ",");
}

std::string RenderPlayersArg(const std::vector<int>& players) {
  std::vector<std::string> toks;
  for (int p : players) toks.push_back(std::to_string(p));
  return Join(toks, ",");
}

}  // namespace pokerforge
