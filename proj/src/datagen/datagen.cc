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

#include "datagen/datagen.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

#include "common/rng.h"
#include "common/strings.h"
#include "hand/hand_eval.h"
#include "script/presets.h"
#include "script/script.h"

namespace pokerforge {

using Json = nlohmann::ordered_json;

std::string_view SampleModeName(SampleMode mode) { return mode == SampleMode::kNsp ? "NSP" : "DSP"; }

SampleMode ParseSampleMode(std::string_view text) {
  const std::string t = ToLower(Trim(text));
  if (t == "nsp") return SampleMode::kNsp;
  if (t == "dsp") return SampleMode::kDsp;
  Fail(ErrorCode::kInvalidArgument, "unknown mode '" + std::string(text) + "'");
}

std::string SampleToJson(const SampleRecord& r) {
  Json j;
  j["game"] = r.game;
  j["script"] = r.script;
  j["prev_state"] = r.prev_state;
  j["input"] = r.input;
  j["target"] = r.target;
  j["mode"] = SampleModeName(r.mode);
  j["round_id"] = r.round_id;
  j["step_idx"] = r.step_idx;
  j["category"] = StepKindName(r.category);
  j["outcome_label"] = r.outcome_label;
  return j.dump();
}

SampleRecord SampleFromJson(std::string_view line) {
  try {
    Json j = Json::parse(line);
    SampleRecord r;
    r.game = j.value("game", "");
    r.script = j.at("script").get<std::string>();
    r.prev_state = j.at("prev_state").get<std::string>();
    r.input = j.at("input").get<std::string>();
    r.target = j.at("target").get<std::string>();
    r.mode = ParseSampleMode(j.at("mode").get<std::string>());
    r.round_id = j.at("round_id").get<std::int64_t>();
    r.step_idx = j.at("step_idx").get<int>();
    auto kind = StepKindFromName(j.at("category").get<std::string>());
    if (!kind) Fail(ErrorCode::kInvalidArgument, "unknown category");
    r.category = *kind;
    r.outcome_label = j.value("outcome_label", "none");
    return r;
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kInvalidArgument, std::string("bad sample record: ") + e.what());
  }
}

std::string RenderCorpus(const std::vector<SampleRecord>& samples) {
  std::string out;
  for (const auto& s : samples) out += SampleToJson(s) + "\n";
  return out;
}

std::vector<SampleRecord> ParseCorpus(std::string_view text) {
  std::vector<SampleRecord> out;
  int line_no = 0;
  for (const auto& line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      out.push_back(SampleFromJson(line));
    } catch (const Error& e) {
      Fail(e.code(), e.what(), line_no);
    }
  }
  return out;
}

GameSpec WithSuits(const GameSpec& spec, const std::vector<std::string>& suits) {
  GameSpec out = spec;
  out.suit_spec.suits = suits;
  out.suit_spec.rank_classes.clear();
  for (const auto& cls : spec.suit_spec.rank_classes) {
    std::vector<std::string> kept;
    for (const auto& s : cls) {
      if (std::find(suits.begin(), suits.end(), s) != suits.end()) kept.push_back(s);
    }
    if (!kept.empty()) out.suit_spec.rank_classes.push_back(kept);
  }
  return out;
}

namespace {

GameSpec Perturb(const GameSpec& base, Rng& rng) {
  GameSpec s = base;
  s.num_players = static_cast<int>(rng.Between(2, std::min(base.num_players + 2, 10)));
  if (rng.Chance(0.3) && s.suit_spec.suits.size() > 2) {
    std::vector<std::string> suits = s.suit_spec.suits;
    suits.erase(suits.begin() + static_cast<long>(rng.Below(suits.size())));
    s = WithSuits(s, suits);
  }
  if (rng.Chance(0.3) && s.value_spec.ordered_values.size() > 8) {
    auto& v = s.value_spec.ordered_values;
    v.erase(v.begin(), v.begin() + rng.Between(1, 4));
  }
  static constexpr Chips kMin[] = {1, 2, 5};
  static constexpr Chips kSpread[] = {1, 2, 5, 10};
  static constexpr Chips kStacks[] = {50, 100, 200, 500};
  s.min_bet = kMin[rng.Below(3)];
  s.max_bet = s.min_bet * kSpread[rng.Below(4)];
  s.raise_cap = static_cast<int>(rng.Between(1, 5));
  s.starting_stack = kStacks[rng.Below(4)];
  s.big_blind = rng.Between(1, s.min_bet);
  s.small_blind = rng.Between(1, s.big_blind);
  for (auto& step : s.flow) {
    if (step.kind == StepKind::kDeal || step.kind == StepKind::kFlop || step.kind == StepKind::kSwitch) {
      step.count = std::max(1, step.count + static_cast<int>(rng.Between(-1, 1)));
    }
  }
  s.name = base.name + " variant";
  return s;
}

}  // namespace

GameSpec SampleVariant(const GameSpec& base, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    GameSpec s = Perturb(base, rng);
    if (ValidateSpec(s).empty()) return s;
  }
  return base;
}

RoundLog SimulateRound(const GameSpec& spec, std::int64_t seed) {
  return RunRound(spec, seed, RandomPolicies(spec, seed));
}

std::vector<RoundLog> SimulateRounds(const GameSpec& spec, int rounds, std::int64_t seed) {
  std::vector<RoundLog> out;
  for (int i = 0; i < rounds; ++i) {
    const auto round_seed = static_cast<std::int64_t>(
        DeriveSeed(static_cast<std::uint64_t>(seed), {static_cast<std::uint64_t>(i)}) & kSeedMask);
    out.push_back(SimulateRound(spec, round_seed));
  }
  return out;
}

std::string RoundOutcome(const RoundLog& log) {
  if (log.transitions.empty() || log.spec.strategies.empty()) return "none";
  const GameState& end = log.transitions.back().next;
  const RankingStrategy& strategy = log.spec.strategies.front();
  std::optional<RankedHand> best;
  for (const auto& e : end.showdown) {
    if (e.strategy != 0) continue;
    RankedHand h = ClassifyHand(log.spec, strategy, e.cards);
    if (!best || CompareHands(h, *best, strategy) == std::strong_ordering::greater) best = std::move(h);
  }
  return best ? best->name : "none";
}

std::vector<BalanceTarget> ParseBalanceTargets(std::string_view text) {
  std::vector<BalanceTarget> out;
  int line_no = 0;
  for (const auto& raw : SplitLines(text)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    auto words = SplitWords(line);
    if (words.empty()) continue;
    if (words.size() < 3) Fail(ErrorCode::kInvalidArgument, "expected 'weight step outcome'", line_no);
    BalanceTarget t;
    try {
      t.weight = std::stod(words[0]);
    } catch (const std::exception&) {
      Fail(ErrorCode::kInvalidArgument, "bad weight '" + words[0] + "'", line_no);
    }
    if (!(t.weight > 0)) Fail(ErrorCode::kInvalidArgument, "weight must be positive", line_no);
    if (words[1] != "*") {
      t.step = StepKindFromName(words[1]);
      if (!t.step) Fail(ErrorCode::kInvalidArgument, "unknown step '" + words[1] + "'", line_no);
    }
    t.outcome = Join(std::vector<std::string>(words.begin() + 2, words.end()), " ");
    out.push_back(std::move(t));
  }
  return out;
}

std::string RenderBalanceTargets(const std::vector<BalanceTarget>& targets) {
  std::string out;
  for (const auto& t : targets) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", t.weight);
    out += std::string(buf) + " " + (t.step ? std::string(StepKindName(*t.step)) : "*") + " " + t.outcome + "\n";
  }
  return out;
}

namespace {

bool HasStep(const RoundLog& log, StepKind kind) {
  return std::any_of(log.transitions.begin(), log.transitions.end(),
                     [&](const Transition& t) { return t.category == kind; });
}

}  // namespace

std::optional<int> MatchTarget(const RoundLog& log, const std::vector<BalanceTarget>& targets) {
  const std::string outcome = RoundOutcome(log);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i].outcome == outcome && (!targets[i].step || HasStep(log, *targets[i].step))) {
      return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

std::vector<RoundLog> Balance(const std::vector<RoundLog>& logs, const std::vector<BalanceTarget>& targets,
                              std::uint64_t seed) {
  if (logs.empty()) Fail(ErrorCode::kInvalidArgument, "no rounds to balance");
  double total_weight = 0;
  for (const auto& t : targets) {
    if (!(t.weight > 0)) Fail(ErrorCode::kInvalidArgument, "weight must be positive");
    total_weight += t.weight;
  }
  std::vector<std::vector<std::size_t>> members(targets.size());
  std::size_t matched = 0;
  for (std::size_t i = 0; i < logs.size(); ++i) {
    if (auto m = MatchTarget(logs[i], targets)) {
      members[*m].push_back(i);
      ++matched;
    }
  }
  std::vector<std::size_t> copies(logs.size(), 1);
  Rng rng(seed);
  for (std::size_t c = 0; c < targets.size(); ++c) {
    const auto& idx = members[c];
    if (idx.empty()) Fail(ErrorCode::kEmptyCategory, targets[c].outcome);
    const auto want =
        static_cast<std::size_t>(std::llround(static_cast<double>(matched) * targets[c].weight / total_weight));
    const std::size_t base = want / idx.size();
    std::vector<std::size_t> order = idx;
    rng.Shuffle(order);
    for (std::size_t i : idx) copies[i] = base;
    for (std::size_t k = 0; k < want % idx.size(); ++k) ++copies[order[k]];
  }
  std::vector<RoundLog> out;
  for (std::size_t i = 0; i < logs.size(); ++i) {
    for (std::size_t k = 0; k < copies[i]; ++k) out.push_back(logs[i]);
  }
  return out;
}

std::vector<SampleRecord> EmitSamples(const RoundLog& log, SampleMode mode, std::int64_t round_id) {
  std::vector<SampleRecord> out;
  if (log.transitions.empty()) return out;
  const std::string script = RenderScript(log.spec);
  const std::string outcome = RoundOutcome(log);
  int idx = 0;
  for (const auto& t : log.transitions) {
    SampleRecord r;
    r.game = log.spec.name;
    r.script = script;
    r.prev_state = SerializeState(t.prev);
    r.input = RenderInput(t.input);
    r.target = mode == SampleMode::kNsp ? SerializeState(t.next) : RenderDiff(t.diff);
    r.mode = mode;
    r.round_id = round_id;
    r.step_idx = idx++;
    r.category = t.category;
    r.outcome_label = outcome;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SampleRecord> BuildCorpus(const CorpusOptions& options) {
  const auto seed = static_cast<std::uint64_t>(options.seed);
  std::vector<GameSpec> specs;
  if (options.variants > 0) {
    const auto& names = PresetNames();
    for (int i = 0; i < options.variants; ++i) {
      specs.push_back(SampleVariant(LoadPreset(names[static_cast<std::size_t>(i) % names.size()]),
                                    DeriveSeed(seed, {1, static_cast<std::uint64_t>(i)})));
    }
  } else {
    const auto& names = options.presets.empty() ? PresetNames() : options.presets;
    for (const auto& n : names) specs.push_back(LoadPreset(n));
  }
  if (specs.empty() || options.rounds <= 0) return {};

  std::vector<RoundLog> pool;
  std::vector<SampleRecord> samples;
  for (std::uint64_t batch = 0; batch < 1000; ++batch) {
    for (std::size_t i = 0; i < specs.size(); ++i) {
      auto batch_seed = static_cast<std::int64_t>(DeriveSeed(seed, {2, i, batch}) & kSeedMask);
      for (auto& log : SimulateRounds(specs[i], options.rounds, batch_seed)) pool.push_back(std::move(log));
    }
    std::vector<RoundLog> rounds =
        options.targets.empty() ? pool : Balance(pool, options.targets, DeriveSeed(seed, {3}));
    // Seeded order so that truncation keeps an unbiased subset of rounds.
    std::vector<std::size_t> order(rounds.size());
    for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
    Rng(DeriveSeed(seed, {4})).Shuffle(order);
    samples.clear();
    for (std::size_t r = 0; r < order.size(); ++r) {
      for (SampleMode mode : options.modes) {
        for (auto& rec : EmitSamples(rounds[order[r]], mode, static_cast<std::int64_t>(r))) {
          samples.push_back(std::move(rec));
        }
      }
    }
    if (options.max_samples == 0 || samples.size() >= options.max_samples) break;
  }
  if (options.max_samples > 0 && samples.size() > options.max_samples) samples.resize(options.max_samples);
  return samples;
}

std::string CoreSetPairToJson(const CoreSetPair& pair) {
  Json j;
  j["function"] = pair.function;
  j["call"] = pair.call;
  j["instruction"] = pair.instruction;
  j["behavior"] = pair.behavior;
  return j.dump();
}

namespace {

std::string RandomCards(Rng& rng) {
  static const char* kSuits[] = {"H", "D", "C", "S"};
  static const char* kValues[] = {"2", "3", "4", "5", "6", "7", "8", "9", "10", "J", "Q", "K", "A"};
  std::set<std::string> picked;
  const int n = static_cast<int>(rng.Between(1, 3));
  while (static_cast<int>(picked.size()) < n) {
    picked.insert(std::string(kSuits[rng.Below(4)]) + kValues[rng.Below(13)]);
  }
  std::vector<std::string> v(picked.begin(), picked.end());
  rng.Shuffle(v);
  return Join(v, ",");
}

std::string PlayersPhrase(const std::string& to) {
  if (to == "all") return "every player";
  auto seats = Split(to, ",");
  return seats.size() == 1 ? "player " + seats[0] : "players " + Join(seats, ", ");
}

std::string ArgValue(const CallArgs& args, const std::string& name) {
  for (const auto& a : args) {
    if (a.name == name) return a.value;
  }
  return "";
}

std::string Pick(Rng& rng, const std::vector<std::string>& options) { return options[rng.Below(options.size())]; }

std::string Instruction(Rng& rng, const CoreFunction& fn, const CallArgs& args) {
  auto arg = [&](const char* name) { return ArgValue(args, name); };
  const std::string& f = fn.name;
  if (f == "shuffle") {
    return Pick(rng, {"Shuffle the deck using random seed " + arg("seed") + ".",
                      "Randomly reorder the cards left in the deck; use " + arg("seed") + " as the seed.",
                      "Mix up the deck with seed " + arg("seed") + " before anything is dealt."});
  }
  if (f == "post_blinds") {
    return Pick(rng, {"Have the two players left of the button post the small and big blinds.",
                      "Collect the blinds: the first seat after the button pays the small blind and the "
                      "next seat pays the big blind."});
  }
  if (f == "deal") {
    const std::string who = PlayersPhrase(arg("to"));
    return Pick(rng, {"Deal " + arg("n") + " cards to " + who +
                          ". Deal a number of cards to each player one by one: starting left of the "
                          "button, each player gets one card per pass.",
                      "Give " + who + " " + arg("n") +
                          " cards from the top of the deck, dealing to each player one by one in "
                          "round-robin order from the seat after the button."});
  }
  if (f == "flop") {
    return Pick(rng, {"Reveal " + arg("n") + " community cards from the top of the deck.",
                      "Flop " + arg("n") + " cards onto the table for everybody to share."});
  }
  if (f == "sort_hand") {
    return Pick(rng, {"Sort the hole cards of player " + arg("player") + " into deck order.",
                      "Arrange player " + arg("player") + "'s hand by suit and then value."});
  }
  if (f == "rank_hands") {
    return Pick(rng, {"Find the best hand of each remaining player under ranking strategy " + arg("strategy") + ".",
                      "Rank every hand still in the round using strategy " + arg("strategy") +
                          " and record the result."});
  }
  if (f == "collect_bets") {
    return Pick(rng, {"Gather this street's bets into the pot, making side pots for all-in players.",
                      "Move all current bets to the middle and split side pots where needed."});
  }
  if (f == "next_actor") {
    return Pick(rng, {"Pass the turn to the next player who still has to act.",
                      "Move on to the next waiting player."});
  }
  if (f == "discard") {
    return Pick(rng, {"Player " + arg("player") + " throws away " + arg("cards") + ".",
                      "Move " + arg("cards") + " from player " + arg("player") + "'s hand to the discard pile."});
  }
  if (f == "draw") {
    return Pick(rng, {"Player " + arg("player") + " draws " + arg("n") + " cards from the deck.",
                      "Give player " + arg("player") + " " + arg("n") + " replacement cards off the top of the deck."});
  }
  if (f == "recycle") {
    return Pick(rng, {"The deck is running low: shuffle the discards with seed " + arg("seed") +
                          " and put them under the deck.",
                      "Recycle every discard pile into the bottom of the deck, shuffled with seed " + arg("seed") + "."});
  }
  if (f == "award") {
    return Pick(rng, {"Pay out every pot to its winners.", "Award the pots to the best hands and end the round."});
  }
  std::string call;
  for (const auto& a : args) call += (call.empty() ? " with " : ", ") + a.name + " = " + a.value;
  return "Apply " + f + call + ".";
}

}  // namespace

std::vector<CoreSetPair> EmitCoreSet(const std::vector<CoreFunction>& registry, int n, std::uint64_t seed) {
  std::vector<CoreSetPair> out;
  if (registry.empty()) return out;
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const CoreFunction& fn = registry[static_cast<std::size_t>(i) % registry.size()];
    CallArgs args;
    for (const auto& p : fn.params) {
      std::string v;
      switch (p.kind) {
        case ParamKind::kInt:
          if (p.name == "seed") {
            v = std::to_string(rng.Between(0, 999999));
          } else if (p.name == "player") {
            v = std::to_string(rng.Between(0, 5));
          } else if (p.name == "strategy") {
            v = std::to_string(rng.Between(0, 1));
          } else {
            v = std::to_string(rng.Between(1, 5));
          }
          break;
        case ParamKind::kCards:
          v = RandomCards(rng);
          break;
        case ParamKind::kPlayers:
          if (rng.Chance(0.6)) {
            v = "all";
          } else {
            std::vector<int> seats;
            for (int s = 0; s < 6; ++s) {
              if (rng.Chance(0.5)) seats.push_back(s);
            }
            if (seats.empty()) seats.push_back(static_cast<int>(rng.Below(6)));
            v = RenderPlayersArg(seats);
          }
          break;
      }
      args.push_back({p.name, v});
    }
    CoreSetPair pair;
    pair.function = fn.name;
    pair.call = RenderOp(EditOp::Call(fn.name, args));
    pair.instruction = Instruction(rng, fn, args);
    pair.behavior = pair.call + " : " + fn.doc;
    out.push_back(std::move(pair));
  }
  return out;
}

Segmentation SegmentScript(std::string_view text, const SegmentPolicy& policy, std::uint64_t seed) {
  // Sentence pieces end after a newline or after ". " / "? " / "! ".
  std::vector<std::string> pieces;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    bool end = c == '\n';
    if ((c == '.' || c == '?' || c == '!') && i + 1 < text.size() && text[i + 1] == ' ') {
      ++i;
      end = true;
    }
    if (end) {
      pieces.emplace_back(text.substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  if (start < text.size()) pieces.emplace_back(text.substr(start));

  Rng rng(seed);
  Segmentation out;
  const int lo = std::max(1, policy.min_sentences);
  const int hi = std::max(lo, policy.max_sentences);
  for (std::size_t i = 0; i < pieces.size();) {
    const auto take = static_cast<std::size_t>(rng.Between(lo, hi));
    std::string chunk;
    for (std::size_t k = 0; k < take && i < pieces.size(); ++k) chunk += pieces[i++];
    out.chunks.push_back(std::move(chunk));
  }
  const std::size_t n = out.chunks.size();
  out.rephrase.assign(n, false);
  if (n == 0) return out;
  if (rng.Chance(policy.all_marked_prob)) {
    out.rephrase.assign(n, true);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) out.rephrase[i] = rng.Chance(policy.rephrase_prob);
  if (std::all_of(out.rephrase.begin(), out.rephrase.end(), [](bool b) { return b; })) {
    out.rephrase[rng.Below(n)] = false;
  }
  return out;
}

CorpusStats ComputeCorpusStats(const std::vector<SampleRecord>& samples) {
  CorpusStats stats;
  stats.samples = samples.size();
  struct Acc {
    std::set<std::int64_t> rounds;
    double script = 0, input = 0, prev = 0, target = 0;
  };
  Acc acc[2];
  for (const auto& s : samples) {
    Acc& a = acc[s.mode == SampleMode::kNsp ? 0 : 1];
    a.rounds.insert(s.round_id);
    a.script += static_cast<double>(s.script.size());
    a.input += static_cast<double>(s.input.size());
    a.prev += static_cast<double>(s.prev_state.size());
    a.target += static_cast<double>(s.target.size());
    ++stats.per_category[static_cast<std::size_t>(
        std::find(std::begin(kAllStepKinds), std::end(kAllStepKinds), s.category) - std::begin(kAllStepKinds))];
    ModeStats& m = s.mode == SampleMode::kNsp ? stats.nsp : stats.dsp;
    ++m.samples;
  }
  for (int k = 0; k < 2; ++k) {
    ModeStats& m = k == 0 ? stats.nsp : stats.dsp;
    m.rounds = acc[k].rounds.size();
    if (m.samples == 0) continue;
    const auto n = static_cast<double>(m.samples);
    m.mean_script_chars = acc[k].script / n;
    m.mean_input_chars = acc[k].input / n;
    m.mean_prev_chars = acc[k].prev / n;
    m.mean_target_chars = acc[k].target / n;
    m.mean_states_per_round = n / static_cast<double>(m.rounds);
  }
  return stats;
}

std::string RenderCorpusStats(const CorpusStats& stats) {
  auto mode = [](const ModeStats& m) {
    Json j;
    j["samples"] = m.samples;
    j["rounds"] = m.rounds;
    j["mean_script_chars"] = std::round(m.mean_script_chars * 100) / 100;
    j["mean_input_chars"] = std::round(m.mean_input_chars * 100) / 100;
    j["mean_prev_state_chars"] = std::round(m.mean_prev_chars * 100) / 100;
    j["mean_target_chars"] = std::round(m.mean_target_chars * 100) / 100;
    j["mean_states_per_round"] = std::round(m.mean_states_per_round * 100) / 100;
    return j;
  };
  Json j;
  j["samples"] = stats.samples;
  j["nsp"] = mode(stats.nsp);
  j["dsp"] = mode(stats.dsp);
  Json cats = Json::object();
  for (int i = 0; i < kNumStepKinds; ++i) cats[std::string(StepKindName(kAllStepKinds[i]))] = stats.per_category[i];
  j["categories"] = cats;
  return j.dump(2) + "\n";
}

}  // namespace pokerforge
