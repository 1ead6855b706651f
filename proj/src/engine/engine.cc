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

#include "engine/engine.h"

#include <algorithm>
#include <memory>

#include "common/error.h"
#include "common/rng.h"
#include "common/strings.h"
#include "engine/core_ops.h"
#include "script/script.h"

namespace pokerforge {
namespace {

int Seats(const GameState& s) { return static_cast<int>(s.stacks.size()); }

Chips HighBet(const GameState& s) {
  Chips high = 0;
  for (Chips b : s.street_bets) high = std::max(high, b);
  return high;
}

bool Active(const GameState& s, int p) { return !s.IsFolded(p) && !s.IsAllIn(p); }

void AddSorted(std::vector<int>& v, int x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) {
    v.push_back(x);
    std::sort(v.begin(), v.end());
  }
}

std::string Player(int p) { return "player " + std::to_string(p); }

// Accumulates a transition as direct edits interleaved with core calls, so
// that the emitted diff replays it exactly.
class Builder {
 public:
  Builder(const GameSpec& spec, const GameState& prev) : spec_(spec), anchor_(prev), s(prev) {}

  void Call(const std::string& name, CallArgs args = {}) {
    Flush();
    s = InvokeCore(spec_, name, args, s);
    ops_.push_back(EditOp::Call(name, std::move(args)));
    anchor_ = s;
  }

  void Say(int target, std::string text) { messages_.push_back({kEngine, target, std::move(text)}); }

  StepResult Finish(StepKind category) {
    s.messages = messages_;
    Flush();
    return {s, DiffScript{ops_}, category};
  }

 private:
  void Flush() {
    auto residual = ComputeDiff(anchor_, s);
    ops_.insert(ops_.end(), residual.ops.begin(), residual.ops.end());
    anchor_ = s;
  }

  const GameSpec& spec_;
  GameState anchor_;
  std::vector<EditOp> ops_;
  std::vector<Message> messages_;

 public:
  GameState s;
};

std::uint64_t StepSeed(const GameState& s, std::uint64_t salt) {
  return DeriveSeed(static_cast<std::uint64_t>(s.seed), {s.flow_cache.size(), salt}) & kSeedMask;
}

// Sets up whoever must act in the next step, if anyone.
void Prepare(const GameSpec& spec, Builder& b) {
  GameState& s = b.s;
  s.pending.clear();
  s.current_actor.reset();
  auto next = NextStep(spec, s);
  if (!next) return;
  const int n = Seats(s);
  if (next->kind == StepKind::kBet) {
    // Blinds still on the table mean the first seat after the big blind
    // opens; otherwise the seat after the button.
    const int first = HighBet(s) > 0 ? s.button + 3 : s.button + 1;
    std::vector<int> active;
    for (int p : SeatsFrom(n, first)) {
      if (Active(s, p)) active.push_back(p);
    }
    if (active.size() >= 2 || (active.size() == 1 && s.street_bets[active[0]] < HighBet(s))) {
      s.pending = active;
    }
  } else if (next->kind == StepKind::kSwitch) {
    for (int p : SeatsFrom(n, s.button + 1)) {
      if (Active(s, p)) s.pending.push_back(p);
    }
  }
  if (s.pending.empty()) return;
  s.current_actor = s.pending.front();
  if (next->kind == StepKind::kBet) {
    b.Say(*s.current_actor, "your turn to bet");
  } else {
    b.Say(*s.current_actor, "your turn to switch up to " + std::to_string(next->count) + " cards");
  }
}

void CloseBetting(const GameSpec& spec, Builder& b) {
  b.Call("collect_bets");
  b.s.flow_cache.push_back({StepKind::kBet, 0});
  Prepare(spec, b);
}

StepResult StartRound(const GameSpec& spec, const GameState& blank) {
  const int n = spec.num_players;
  Builder b(spec, blank);
  GameState& s = b.s;
  s.flow_cache = {spec.flow.front()};
  s.button = static_cast<int>(((s.seed % n) + n) % n);
  s.deck = CanonicalDeck(spec);
  s.hole.assign(n, {});
  s.community.clear();
  s.discards.assign(n, {});
  s.stacks.assign(n, spec.starting_stack);
  s.street_bets.assign(n, 0);
  s.pots.clear();
  s.raises = 0;
  s.folded.clear();
  s.all_in.clear();
  s.showdown.clear();
  Prepare(spec, b);
  return b.Finish(StepKind::kStart);
}

StepResult BetAction(const GameSpec& spec, const GameState& prev, const PlayerInput& in) {
  Builder b(spec, prev);
  GameState& s = b.s;
  const int p = in.player;
  const int n = Seats(s);
  const Chips high = HighBet(s);
  const Chips to_call = high - s.street_bets[p];
  bool reopened = false;
  auto pay = [&](Chips chips) {
    s.stacks[p] -= chips;
    s.street_bets[p] += chips;
  };
  switch (in.kind) {
    case ActionKind::kCheck:
      b.Say(kAllPlayers, Player(p) + " checks");
      break;
    case ActionKind::kCall:
      pay(to_call);
      b.Say(kAllPlayers, Player(p) + " calls " + std::to_string(to_call));
      break;
    case ActionKind::kRaise:
      pay(to_call + in.amount);
      ++s.raises;
      reopened = true;
      b.Say(kAllPlayers, Player(p) + " raises " + std::to_string(in.amount));
      break;
    case ActionKind::kFold:
      AddSorted(s.folded, p);
      for (auto& pot : s.pots) {
        auto it = std::find(pot.eligible.begin(), pot.eligible.end(), p);
        if (it != pot.eligible.end() && pot.eligible.size() > 1) pot.eligible.erase(it);
      }
      b.Say(kAllPlayers, Player(p) + " folds");
      break;
    case ActionKind::kAllIn: {
      const Chips chips = s.stacks[p];
      pay(chips);
      AddSorted(s.all_in, p);
      if (s.street_bets[p] > high) {
        ++s.raises;
        reopened = true;
      }
      b.Say(kAllPlayers, Player(p) + " goes all in for " + std::to_string(chips));
      break;
    }
    default:
      Fail(ErrorCode::kIllegalAction, "not a betting action");
  }
  if (reopened) {
    s.pending.clear();
    for (int q : SeatsFrom(n, p + 1)) {
      if (q != p && Active(s, q)) s.pending.push_back(q);
    }
  } else {
    s.pending.erase(s.pending.begin());
  }
  if (Unfolded(s).size() == 1 || s.pending.empty()) {
    s.current_actor.reset();
    s.pending.clear();
    CloseBetting(spec, b);
  } else {
    s.current_actor = s.pending.front();
    b.Say(*s.current_actor, "your turn to bet");
  }
  return b.Finish(StepKind::kBet);
}

StepResult SwitchAction(const GameSpec& spec, const GameState& prev, const PlayerInput& in) {
  Builder b(spec, prev);
  const int p = in.player;
  const int k = static_cast<int>(in.cards.size());
  if (k > 0) {
    b.Call("discard", {{"player", std::to_string(p)}, {"cards", RenderCardArg(in.cards)}});
    if (static_cast<int>(b.s.deck.size()) < k) {
      b.Call("recycle", {{"seed", std::to_string(StepSeed(b.s, 1000 + static_cast<std::uint64_t>(p)))}});
    }
    b.Call("draw", {{"player", std::to_string(p)}, {"n", std::to_string(k)}});
    b.Say(kAllPlayers, Player(p) + " switches " + std::to_string(k) + " cards");
  } else {
    b.Say(kAllPlayers, Player(p) + " stands pat");
  }
  GameState& s = b.s;
  s.pending.erase(s.pending.begin());
  if (s.pending.empty()) {
    s.current_actor.reset();
    s.flow_cache.push_back(*NextStep(spec, prev));
    Prepare(spec, b);
  } else {
    s.current_actor = s.pending.front();
    b.Say(*s.current_actor, "your turn to switch up to " + std::to_string(NextStep(spec, prev)->count) + " cards");
  }
  return b.Finish(StepKind::kSwitch);
}

StepResult AutoStep(const GameSpec& spec, const GameState& prev, const FlowStep& step) {
  Builder b(spec, prev);
  GameState& s = b.s;
  switch (step.kind) {
    case StepKind::kStart:
      Fail(ErrorCode::kIllegalAction, "the round has already started");
    case StepKind::kBlind:
      b.Call("post_blinds");
      break;
    case StepKind::kShuffle:
      b.Call("shuffle", {{"seed", std::to_string(StepSeed(s, 0))}});
      break;
    case StepKind::kDeal:
      b.Call("deal", {{"n", std::to_string(step.count)}, {"to", "all"}});
      break;
    case StepKind::kFlop:
      b.Call("flop", {{"n", std::to_string(step.count)}});
      break;
    case StepKind::kBet:
      // Nobody can act: the street closes at once.
      CloseBetting(spec, b);
      return b.Finish(StepKind::kBet);
    case StepKind::kSwitch:
      s.flow_cache.push_back(step);
      break;
    case StepKind::kShow:
      for (std::size_t i = 0; i < spec.strategies.size(); ++i) {
        b.Call("rank_hands", {{"strategy", std::to_string(i)}});
      }
      s.flow_cache.push_back(step);
      break;
    case StepKind::kPrize: {
      const std::vector<Chips> before = s.stacks;
      b.Call("award");
      for (int p = 0; p < Seats(s); ++p) {
        if (s.stacks[p] > before[p]) b.Say(kAllPlayers, Player(p) + " wins " + std::to_string(s.stacks[p] - before[p]));
      }
      break;
    }
  }
  Prepare(spec, b);
  return b.Finish(step.kind);
}

std::vector<PlayerInput> SwitchActions(const GameState& s, int p, int max_discards) {
  std::vector<PlayerInput> out;
  const Cards& hole = s.hole[p];
  const int h = static_cast<int>(hole.size());
  for (int size = 0; size <= std::min(max_discards, h); ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      PlayerInput in{p, ActionKind::kDiscard, 0, {}};
      for (int i : idx) in.cards.push_back(hole[i]);
      out.push_back(std::move(in));
      int i = size - 1;
      while (i >= 0 && idx[i] == h - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

// Reorders discards into hole order; nullopt when they are not a sub-multiset.
std::optional<Cards> InHoleOrder(const Cards& hole, const Cards& cards) {
  std::vector<char> used(hole.size(), 0);
  std::vector<std::size_t> picked;
  for (const auto& c : cards) {
    bool found = false;
    for (std::size_t i = 0; i < hole.size(); ++i) {
      if (!used[i] && hole[i] == c) {
        used[i] = 1;
        picked.push_back(i);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  std::sort(picked.begin(), picked.end());
  Cards out;
  for (auto i : picked) out.push_back(hole[i]);
  return out;
}

}  // namespace

std::string_view ActionKindName(ActionKind kind) {
  switch (kind) {
    case ActionKind::kNone: return "none";
    case ActionKind::kCheck: return "check";
    case ActionKind::kCall: return "call";
    case ActionKind::kRaise: return "raise";
    case ActionKind::kFold: return "fold";
    case ActionKind::kAllIn: return "all_in";
    case ActionKind::kDiscard: return "discard";
  }
  return "?";
}

std::string RenderInput(const PlayerInput& in) {
  if (in.kind == ActionKind::kNone) return "none";
  std::string out = std::to_string(in.player) + " " + std::string(ActionKindName(in.kind));
  if (in.kind == ActionKind::kRaise) out += " " + std::to_string(in.amount);
  for (const auto& c : in.cards) out += " " + c.token;
  return out;
}

PlayerInput ParseInput(std::string_view text) {
  auto words = SplitWords(text);
  auto bad = [&](const std::string& why) -> PlayerInput {
    Fail(ErrorCode::kInvalidArgument, "bad input '" + std::string(text) + "': " + why);
  };
  if (words.size() == 1 && words[0] == "none") return PlayerInput::None();
  if (words.size() < 2) return bad("expected '<seat> <action>'");
  auto seat = ParseInt(words[0]);
  if (!seat || *seat < 0) return bad("seat must be a non-negative integer");
  PlayerInput in;
  in.player = static_cast<int>(*seat);
  const std::string& verb = words[1];
  for (ActionKind k : {ActionKind::kCheck, ActionKind::kCall, ActionKind::kRaise, ActionKind::kFold,
                       ActionKind::kAllIn, ActionKind::kDiscard}) {
    if (verb == ActionKindName(k)) in.kind = k;
  }
  if (in.kind == ActionKind::kNone) return bad("unknown action '" + verb + "'");
  if (in.kind == ActionKind::kRaise) {
    if (words.size() != 3) return bad("raise takes one amount");
    auto amount = ParseInt(words[2]);
    if (!amount) return bad("raise amount must be an integer");
    in.amount = *amount;
  } else if (in.kind == ActionKind::kDiscard) {
    for (std::size_t i = 2; i < words.size(); ++i) in.cards.push_back(Card{words[i]});
  } else if (words.size() != 2) {
    return bad("unexpected arguments");
  }
  return in;
}

std::optional<FlowStep> NextStep(const GameSpec& spec, const GameState& state) {
  if (state.IsBlank()) return spec.flow.front();
  if (state.IsTerminal()) return std::nullopt;
  if (Unfolded(state).size() == 1) return FlowStep{StepKind::kPrize, 0};
  if (state.flow_cache.size() >= spec.flow.size()) return std::nullopt;
  return spec.flow[state.flow_cache.size()];
}

GameState InitRound(const GameSpec& spec, std::int64_t seed) {
  auto violations = ValidateSpec(spec);
  if (!violations.empty()) {
    Fail(ErrorCode::kInvalidSpec, violations.front().code + ": " + violations.front().message);
  }
  return StartRound(spec, BlankState(seed)).next;
}

Chips ToCall(const GameState& state, int player) { return HighBet(state) - state.street_bets[player]; }

std::vector<PlayerInput> LegalActions(const GameSpec& spec, const GameState& state) {
  std::vector<PlayerInput> out;
  if (!state.current_actor) return out;
  auto step = NextStep(spec, state);
  if (!step) return out;
  const int p = *state.current_actor;
  if (step->kind == StepKind::kSwitch) return SwitchActions(state, p, step->count);
  if (step->kind != StepKind::kBet) return out;
  const Chips to_call = ToCall(state, p);
  const Chips stack = state.stacks[p];
  if (to_call == 0) out.push_back({p, ActionKind::kCheck, 0, {}});
  if (to_call > 0 && stack > to_call) out.push_back({p, ActionKind::kCall, 0, {}});
  if (state.raises < spec.raise_cap) {
    for (Chips r = spec.min_bet; r <= std::min(spec.max_bet, stack - to_call - 1); ++r) {
      out.push_back({p, ActionKind::kRaise, r, {}});
    }
  }
  if (to_call > 0) out.push_back({p, ActionKind::kFold, 0, {}});
  if (stack - to_call <= spec.max_bet && (state.raises < spec.raise_cap || stack <= to_call)) {
    out.push_back({p, ActionKind::kAllIn, 0, {}});
  }
  return out;
}

StepResult Step(const GameSpec& spec, const GameState& state, const PlayerInput& input) {
  auto step = NextStep(spec, state);
  if (!step) Fail(ErrorCode::kIllegalAction, "the round is over");
  if (state.IsBlank()) {
    if (input.kind != ActionKind::kNone) Fail(ErrorCode::kIllegalAction, "the start step takes no input");
    return StartRound(spec, state);
  }
  if (!state.current_actor) {
    if (input.kind != ActionKind::kNone) {
      Fail(ErrorCode::kIllegalAction, "no player is to act in the " + std::string(StepKindName(step->kind)) + " step");
    }
    return AutoStep(spec, state, *step);
  }
  const int actor = *state.current_actor;
  if (input.player != actor) {
    Fail(ErrorCode::kIllegalAction, "it is " + Player(actor) + "'s turn");
  }
  if (step->kind == StepKind::kSwitch) {
    if (input.kind != ActionKind::kDiscard) Fail(ErrorCode::kIllegalAction, "the switch step takes a discard");
    auto ordered = InHoleOrder(state.hole[actor], input.cards);
    if (!ordered) Fail(ErrorCode::kIllegalAction, "discards must come from the player's hole");
    if (static_cast<int>(ordered->size()) > step->count) {
      Fail(ErrorCode::kIllegalAction, "at most " + std::to_string(step->count) + " cards may be switched");
    }
    PlayerInput normal = input;
    normal.cards = *ordered;
    return SwitchAction(spec, state, normal);
  }
  auto legal = LegalActions(spec, state);
  PlayerInput probe = input;
  probe.cards.clear();
  if (!input.cards.empty() || std::find(legal.begin(), legal.end(), probe) == legal.end()) {
    Fail(ErrorCode::kIllegalAction, "'" + RenderInput(input) + "' is not legal now");
  }
  return BetAction(spec, state, input);
}

RoundLog RunRound(const GameSpec& spec, std::int64_t seed, const std::vector<Policy>& policies) {
  RoundLog log{spec, seed, {}};
  const std::size_t bound = 10 * spec.flow.size() * static_cast<std::size_t>(spec.num_players);
  GameState s = BlankState(seed);
  while (!s.IsTerminal()) {
    if (log.transitions.size() >= bound) {
      Fail(ErrorCode::kNonTermination, "round exceeded " + std::to_string(bound) + " transitions");
    }
    PlayerInput input = PlayerInput::None();
    if (s.current_actor) {
      const int p = *s.current_actor;
      if (p >= static_cast<int>(policies.size()) || !policies[p]) {
        Fail(ErrorCode::kInvalidArgument, "no policy for seat " + std::to_string(p));
      }
      input = policies[p](spec, s, LegalActions(spec, s));
    }
    StepResult r = Step(spec, s, input);
    log.transitions.push_back({s, input, r.next, std::move(r.diff), r.category});
    s = std::move(r.next);
  }
  return log;
}

Policy RandomPolicy(std::uint64_t seed) {
  auto rng = std::make_shared<Rng>(seed);
  return [rng](const GameSpec&, const GameState&, const std::vector<PlayerInput>& legal) {
    if (legal.empty()) return PlayerInput::None();
    if (legal.front().kind == ActionKind::kDiscard) return legal[rng->Below(legal.size())];
    auto find = [&](ActionKind k) -> const PlayerInput* {
      for (const auto& a : legal) {
        if (a.kind == k) return &a;
      }
      return nullptr;
    };
    const double u = rng->Unit();
    if (u < 0.10 && find(ActionKind::kFold)) return *find(ActionKind::kFold);
    if (u >= 0.10 && u < 0.15 && find(ActionKind::kAllIn)) return *find(ActionKind::kAllIn);
    std::vector<ActionKind> kinds;
    for (ActionKind k : {ActionKind::kCheck, ActionKind::kCall, ActionKind::kRaise}) {
      if (find(k)) kinds.push_back(k);
    }
    if (kinds.empty()) return legal[rng->Below(legal.size())];
    const ActionKind k = kinds[rng->Below(kinds.size())];
    std::vector<const PlayerInput*> options;
    for (const auto& a : legal) {
      if (a.kind == k) options.push_back(&a);
    }
    return *options[rng->Below(options.size())];
  };
}

std::vector<Policy> RandomPolicies(const GameSpec& spec, std::int64_t round_seed) {
  std::vector<Policy> out;
  for (int p = 0; p < spec.num_players; ++p) {
    out.push_back(RandomPolicy(DeriveSeed(static_cast<std::uint64_t>(round_seed), {0x706c6179ull, static_cast<std::uint64_t>(p)})));
  }
  return out;
}

}  // namespace pokerforge
