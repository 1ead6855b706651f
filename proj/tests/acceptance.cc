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

// Acceptance run: one PASS/FAIL line per primary criterion. Expected values
// come from oracles written here, independent of the library code paths
// they check.
#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "common/rng.h"
#include "datagen/datagen.h"
#include "diff/diff.h"
#include "engine/engine.h"
#include "eval/eval.h"
#include "hand/hand_eval.h"
#include "script/presets.h"
#include "script/script.h"
#include "state/game_state.h"

namespace pokerforge {
namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void Report(bool ok, const std::string& name, const std::string& detail) {
  std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Fmt(const char* fmt, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, a, b, c, d);
  return buf;
}

std::string ReadFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GameSpec GameFile(const std::string& file) {
  return ParseScript(ReadFile(std::filesystem::path(POKERFORGE_SOURCE_DIR) / "games" / file));
}

Cards ParseCards(const std::string& text) {
  Cards out;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) out.push_back(Card{tok});
  return out;
}

// ---- rounds, diffs, conservation -------------------------------------------

std::multiset<std::string> CardMultiset(const GameState& s) {
  std::multiset<std::string> out;
  for (const auto& c : s.deck) out.insert(c.token);
  for (const auto& h : s.hole) {
    for (const auto& c : h) out.insert(c.token);
  }
  for (const auto& c : s.community) out.insert(c.token);
  for (const auto& d : s.discards) {
    for (const auto& c : d) out.insert(c.token);
  }
  return out;
}

Chips ChipTotal(const GameState& s) {
  Chips total = 0;
  for (Chips c : s.stacks) total += c;
  for (Chips c : s.street_bets) total += c;
  for (const auto& p : s.pots) total += p.amount;
  return total;
}

void RoundCriteria() {
  const auto start = Clock::now();
  int rounds = 0, completed = 0, violations = 0;
  long transitions = 0, roundtrip_ok = 0, conserved = 0;
  std::string first_problem;
  auto note = [&](const std::string& what) {
    if (first_problem.empty()) first_problem = what;
  };
  for (const auto& name : PresetNames()) {
    const GameSpec spec = LoadPreset(name);
    std::multiset<std::string> full_deck;
    for (const auto& c : CanonicalDeck(spec)) full_deck.insert(c.token);
    const Chips chips = static_cast<Chips>(spec.num_players) * spec.starting_stack;
    for (const auto& log : SimulateRounds(spec, 20, 1000)) {
      ++rounds;
      if (!log.transitions.empty() && log.transitions.back().category == StepKind::kPrize &&
          log.transitions.back().next.IsTerminal()) {
        ++completed;
      } else {
        note(name + ": round did not reach prize");
      }
      for (const auto& t : log.transitions) {
        ++transitions;
        const auto v = ValidateState(spec, t.next);
        violations += static_cast<int>(v.size());
        if (!v.empty()) note(name + ": " + v.front().code + " " + v.front().message);

        if (Merge(spec, t.prev, ComputeDiff(t.prev, t.next)) == t.next) {
          ++roundtrip_ok;
        } else {
          note(name + ": diff roundtrip differs");
        }

        // The blank state before start holds no cards and no chips.
        bool ok = CardMultiset(t.next) == full_deck && ChipTotal(t.next) == chips;
        if (!t.prev.IsBlank()) ok = ok && CardMultiset(t.prev) == full_deck && ChipTotal(t.prev) == chips;
        if (ok) {
          ++conserved;
        } else {
          note(name + ": conservation broken");
        }
      }
    }
  }
  const double secs = Seconds(start);
  Report(completed == 200 && rounds == 200 && violations == 0 && secs < 60, "round-completion",
         Fmt("%.0f/%.0f rounds reached prize, %.0f invariant violations, %.1f s", completed, rounds, violations, secs) +
             (first_problem.empty() ? "" : "; " + first_problem));
  Report(transitions >= 7000 && roundtrip_ok == transitions, "diff-roundtrip",
         Fmt("%.0f/%.0f transitions merge back exactly", roundtrip_ok, transitions));
  Report(transitions > 0 && conserved == transitions, "conservation",
         Fmt("%.0f/%.0f transitions conserve cards and chips", conserved, transitions));
}

// ---- hand evaluation -------------------------------------------------------

Cards Deck20(const GameSpec& spec) {
  Cards out;
  const int nv = static_cast<int>(spec.value_spec.ordered_values.size());
  const int ns = std::min<int>(4, static_cast<int>(spec.suit_spec.suits.size()));
  const int per_suit = 20 / ns;
  for (int s = 0; s < ns; ++s) {
    for (int i = 0; i < per_suit - 1; ++i) out.push_back(MakeCard(spec, s, i));
    out.push_back(MakeCard(spec, s, nv - 1));
  }
  return out;
}

// Calls f on every k-subset of n indices in lexicographic order.
void ForEachSubset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Classifies every 5-card hand of the deck.
int CountStraightFlushesByClassify(const GameSpec& spec) {
  const auto& st = spec.strategies[0];
  const Cards deck = CanonicalDeck(spec);
  int count = 0;
  ForEachSubset(static_cast<int>(deck.size()), 5, [&](const std::vector<int>& idx) {
    Cards cards;
    for (int i : idx) cards.push_back(deck[i]);
    if (ClassifyHand(spec, st, cards).name == "Straight Flush") ++count;
  });
  return count;
}

void HandCriterion() {
  const auto start = Clock::now();
  long compared = 0, agreed = 0;
  std::string first_problem;
  for (const auto& name : PresetNames()) {
    const GameSpec spec = LoadPreset(name);
    const Cards deck = Deck20(spec);
    for (const auto& st : spec.strategies) {
      // Hole-exact strategies split 4 hole + 3 community; the rest see a
      // seven-card (or hand_size + 2) pool.
      const int k = st.hole_exactly ? 7 : std::min<int>(7, st.hand_size + 2);
      ForEachSubset(static_cast<int>(deck.size()), k, [&](const std::vector<int>& idx) {
        Cards hole, community;
        const std::size_t h = st.hole_exactly ? 4 : idx.size();
        for (std::size_t i = 0; i < idx.size(); ++i) (i < h ? hole : community).push_back(deck[idx[i]]);
        const RankedHand fast = BestHand(spec, st, hole, community);
        const RankedHand slow = OracleBestHand(spec, st, hole, community);
        ++compared;
        if (CompareHands(fast, slow, st) == std::strong_ordering::equal) {
          ++agreed;
        } else if (first_problem.empty()) {
          first_problem = name + ": " + fast.name + " vs oracle " + slow.name;
        }
      });
    }
  }
  const int straight_flushes = CountStraightFlushesByClassify(LoadPreset("texas"));
  Report(compared >= 100000 && agreed == compared && straight_flushes == 40, "hand-eval-oracle",
         Fmt("%.0f/%.0f best_hand = oracle; %.0f straight flushes in C(52,5); %.1f s", agreed, compared,
             straight_flushes, Seconds(start)) +
             (first_problem.empty() ? "" : "; " + first_problem));
}

// ---- corpus ----------------------------------------------------------------

void CompressionCriterion() {
  const auto start = Clock::now();
  double diff_chars = 0, state_chars = 0;
  long n = 0;
  const auto& names = PresetNames();
  for (int r = 0; r < 1000; ++r) {
    const GameSpec spec = LoadPreset(names[static_cast<std::size_t>(r) % names.size()]);
    const RoundLog log = SimulateRound(spec, static_cast<std::int64_t>(DeriveSeed(99, {static_cast<std::uint64_t>(r)}) & kSeedMask));
    const auto dsp = EmitSamples(log, SampleMode::kDsp, r);
    const auto nsp = EmitSamples(log, SampleMode::kNsp, r);
    for (std::size_t i = 0; i < dsp.size(); ++i) {
      diff_chars += static_cast<double>(dsp[i].target.size());
      state_chars += static_cast<double>(nsp[i].target.size());
      ++n;
    }
  }
  const double mean_diff = diff_chars / static_cast<double>(n);
  const double mean_state = state_chars / static_cast<double>(n);
  Report(mean_diff < 0.75 * mean_state, "dsp-compression",
         Fmt("1000 rounds, %.0f targets: mean diff %.1f chars vs mean state %.1f chars (ratio %.3f)", n, mean_diff,
             mean_state, mean_diff / mean_state) +
             Fmt("; %.1f s", Seconds(start)));
}

void CorpusShapeCriterion() {
  const auto start = Clock::now();
  CorpusOptions o;
  o.rounds = 20;
  o.modes = {SampleMode::kDsp};
  o.seed = 4242;
  o.max_samples = 10000;
  o.targets = ParseBalanceTargets(
      "1 * none\n"
      "1 * High Card\n"
      "1 * Pair\n"
      "1 * Two Pair\n"
      "1 * Three of a Kind\n"
      "1 * Straight\n"
      "1 * Flush\n");
  const auto corpus = BuildCorpus(o);
  const CorpusStats stats = ComputeCorpusStats(corpus);

  std::set<StepKind> categories;
  std::map<std::int64_t, std::string> round_outcome;
  for (const auto& r : corpus) {
    categories.insert(r.category);
    round_outcome[r.round_id] = r.outcome_label;
  }
  std::map<std::string, int> per_outcome;
  int targeted = 0;
  for (const auto& [id, outcome] : round_outcome) {
    for (const auto& t : o.targets) {
      if (t.outcome == outcome) {
        ++per_outcome[outcome];
        ++targeted;
        break;
      }
    }
  }
  double total_weight = 0;
  for (const auto& t : o.targets) total_weight += t.weight;
  double worst = 1.0;
  std::string shares;
  for (const auto& t : o.targets) {
    const double want = t.weight / total_weight;
    const double got = targeted == 0 ? 0.0 : per_outcome[t.outcome] / static_cast<double>(targeted);
    const double ratio = got == 0 ? 0.0 : std::min(got / want, want / got);
    worst = std::min(worst, ratio);
    shares += Fmt(" %.3f", got);
  }
  Report(corpus.size() == 10000 && categories.size() == kNumStepKinds && worst >= 0.5, "corpus-shape",
         Fmt("%.0f samples, %.0f/9 categories, mean states per round %.2f, worst share/target ratio %.2f", corpus.size(),
             categories.size(), stats.dsp.mean_states_per_round, worst) +
             " (shares" + shares + " vs target " + Fmt("%.3f", 1.0 / static_cast<double>(o.targets.size())) + ")" +
             Fmt("; %.1f s", Seconds(start)));
}

// ---- evaluation harness ------------------------------------------------------

void HarnessCriterion() {
  CorpusOptions o;
  o.rounds = 20;
  o.modes = {SampleMode::kNsp, SampleMode::kDsp};
  o.seed = 7;
  const auto gold = BuildCorpus(o);
  bool ok = !gold.empty();
  std::string detail;
  for (SampleMode mode : {SampleMode::kNsp, SampleMode::kDsp}) {
    const ScoreReport self = ScoreStates(gold, GoldPredictions(gold, mode), mode);
    bool self_ok = self.rounds.total > 0 && self.rounds.success == self.rounds.total;
    for (StepKind k : kAllStepKinds) {
      const auto& c = self.Category(k);
      self_ok = self_ok && c.total > 0 && c.correct == c.total;
    }
    const ScoreReport mutated = ScoreStates(gold, MutatePredictions(gold, mode, StepKind::kDeal, 10), mode);
    const auto& deal = mutated.Category(StepKind::kDeal);
    bool mut_ok = deal.total > 0 && deal.correct * 10 == deal.total * 9;
    for (StepKind k : kAllStepKinds) {
      if (k == StepKind::kDeal) continue;
      const auto& c = mutated.Category(k);
      mut_ok = mut_ok && c.correct == c.total;
    }
    ok = ok && self_ok && mut_ok;
    detail += std::string(detail.empty() ? "" : "; ") + std::string(SampleModeName(mode)) +
              Fmt(" gold %.0f/%.0f rounds, deal mutation %.0f/%.0f", self.rounds.success, self.rounds.total,
                  deal.correct, deal.total) +
              Fmt(" = %.2f%%", 100.0 * deal.Accuracy());
  }
  Report(ok, "harness-self-consistency", detail);
}

// ---- appendix scripts ----------------------------------------------------------

// Three-card classification written from the rules: three suits, no wrap,
// ace high only.
std::string ThreeCardOracle(const std::array<int, 3>& v, const std::array<int, 3>& s) {
  std::array<int, 3> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  const bool consecutive = sorted[1] == sorted[0] + 1 && sorted[2] == sorted[1] + 1;
  const bool suited = s[0] == s[1] && s[1] == s[2];
  if (consecutive && suited) return "Straight Flush";
  if (sorted[0] == sorted[2]) return "Three of a Kind";
  if (consecutive) return "Straight";
  if (suited) return "Flush";
  if (sorted[0] == sorted[1] || sorted[1] == sorted[2]) return "Pair";
  return "High Card";
}

void AppendixCriterion() {
  std::vector<std::string> failed;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  };

  // Three-card draw: every hand of the 39-card deck.
  const GameSpec three = GameFile("three_card_draw.game");
  check(ValidateSpec(three).empty(), "3-card draw validates");
  const Cards deck3 = CanonicalDeck(three);
  long agree = 0, total = 0, sf = 0;
  ForEachSubset(static_cast<int>(deck3.size()), 3, [&](const std::vector<int>& idx) {
    std::array<int, 3> v{}, s{};
    Cards cards;
    for (int i = 0; i < 3; ++i) {
      v[i] = idx[i] % 13;
      s[i] = idx[i] / 13;
      cards.push_back(deck3[idx[i]]);
    }
    const std::string want = ThreeCardOracle(v, s);
    if (want == "Straight Flush") ++sf;
    ++total;
    if (ClassifyHand(three, three.strategies[0], cards).name == want) ++agree;
  });
  check(total == 9139 && agree == total && sf == 33, "3-card draw classification");

  // Six-card draw goldens and ordering.
  const GameSpec six = GameFile("six_card_draw.game");
  check(ValidateSpec(six).empty(), "6-card draw validates");
  const auto& st6 = six.strategies[0];
  const RankedHand three_pair = ClassifyHand(six, st6, ParseCards("D8 H8 C10 H10 H12 D12"));
  const RankedHand big_house = ClassifyHand(six, st6, ParseCards("H8 C8 S8 C12 H12 D12"));
  const RankedHand full_house = ClassifyHand(six, st6, ParseCards("H8 C8 S8 C12 H12 D3"));
  check(three_pair.name == "Three Pair", "Three Pair golden");
  check(big_house.name == "Big House", "Big House golden");
  check(full_house.name == "Full House" && CompareHands(full_house, three_pair, st6) == std::strong_ordering::less &&
            CompareHands(three_pair, big_house, st6) == std::strong_ordering::less,
        "Full House < Three Pair < Big House");

  // Odd Lover value order.
  const GameSpec odd = GameFile("odd_lover.game");
  check(ValidateSpec(odd).empty(), "Odd Lover validates");
  check(odd.value_spec.ordered_values == std::vector<std::string>{"2", "4", "6", "8", "10", "1", "3", "5", "7", "9"}, "Odd Lover ordering");

  // Joker five of a kind.
  const GameSpec joker = GameFile("joker_holdem.game");
  check(ValidateSpec(joker).empty(), "Joker game validates");
  check(ClassifyHand(joker, joker.strategies[0], ParseCards("H10 D10 C10 S10 J1")).name == "Five of a Kind",
        "Joker Five of a Kind");

  std::string detail = failed.empty() ? "scripts 3-card draw, 6-card draw, Odd Lover, Joker encode; all goldens hold"
                                      : "failed:";
  for (const auto& f : failed) detail += " [" + f + "]";
  detail += Fmt("; 3-card sweep %.0f/%.0f", agree, total);
  Report(failed.empty(), "appendix-scripts", detail);
}

// ---- determinism -------------------------------------------------------------

bool RunCli(const std::string& args) {
  const std::string cmd = std::string(POKERFORGE_CLI) + " " + args + " > /dev/null 2>&1";
  return std::system(cmd.c_str()) == 0;
}

void DeterminismCriterion() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("pokerforge_acceptance_" + std::to_string(getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string d = dir.string() + "/";
  std::vector<std::string> failed;
  bool ran = true;
  for (const char* run : {"1", "2"}) {
    const std::string r = run;
    ran = ran && RunCli("simulate --preset badeucey --rounds 5 --seed 12 --mode nsp --out " + d + "sim" + r);
    ran = ran && RunCli("datagen --variants 10 --rounds 4 --mode nsp --mode dsp --seed 5 --samples 2000 --out " + d +
                        "corpus" + r + " --stats " + d + "stats" + r);
    ran = ran && RunCli("mutate --gold " + d + "corpus1 --mode dsp --category bet --every 7 --out " + d + "pred" + r);
    ran = ran && RunCli("eval --gold " + d + "corpus1 --pred " + d + "pred1 --mode dsp --report " + d + "report" + r +
                        " --json " + d + "json" + r);
  }
  int files = 0;
  for (const char* f : {"sim", "corpus", "stats", "pred", "report", "json"}) {
    const std::string a = ReadFile(d + f + "1"), b = ReadFile(d + f + "2");
    if (a.empty() || a != b) failed.push_back(f);
    ++files;
  }

  // Library calls repeated in process.
  CorpusOptions o;
  o.variants = 5;
  o.rounds = 3;
  o.modes = {SampleMode::kDsp};
  o.seed = 8;
  const std::string c1 = RenderCorpus(BuildCorpus(o)), c2 = RenderCorpus(BuildCorpus(o));
  if (c1 != c2) failed.push_back("library corpus");
  fs::remove_all(dir);

  std::string detail = Fmt("%.0f CLI output pairs compared", files);
  if (!ran) detail += "; a CLI command failed";
  for (const auto& f : failed) detail += "; differs: " + f;
  Report(ran && failed.empty(), "determinism", detail);
}

}  // namespace
}  // namespace pokerforge

int main() {
  using namespace pokerforge;
  RoundCriteria();
  HandCriterion();
  CompressionCriterion();
  CorpusShapeCriterion();
  HarnessCriterion();
  AppendixCriterion();
  DeterminismCriterion();
  std::printf("%d failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
