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

#ifndef POKERFORGE_DATAGEN_DATAGEN_H_
#define POKERFORGE_DATAGEN_DATAGEN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diff/core_registry.h"
#include "engine/engine.h"

namespace pokerforge {

enum class SampleMode { kNsp, kDsp };

std::string_view SampleModeName(SampleMode mode);  // "NSP" / "DSP"
// Accepts either case. Throws Error(kInvalidArgument).
SampleMode ParseSampleMode(std::string_view text);

// One training example: a single transition of a logged round.
struct SampleRecord {
  std::string game;    // spec name
  std::string script;  // RenderScript of the spec
  std::string prev_state;
  std::string input;
  // Next state text (NSP) or diff text (DSP).
  std::string target;
  SampleMode mode = SampleMode::kNsp;
  std::int64_t round_id = 0;
  int step_idx = 0;
  StepKind category = StepKind::kStart;
  // Winning combination of the round, or "none" when nobody showed down.
  std::string outcome_label;

  bool operator==(const SampleRecord&) const = default;
};

// One JSON object per line with the field names above; mode and category
// are rendered as names.
std::string SampleToJson(const SampleRecord& record);
// Throws Error(kInvalidArgument).
SampleRecord SampleFromJson(std::string_view line);
std::string RenderCorpus(const std::vector<SampleRecord>& samples);
// Blank lines are skipped. Throws Error(kInvalidArgument, line).
std::vector<SampleRecord> ParseCorpus(std::string_view text);

// A copy of a preset with configurable elements perturbed: suit set, value
// set, bet limits and stack, deal and flop counts, player count. Resamples
// until ValidateSpec passes; after the retry bound it returns the base.
GameSpec SampleVariant(const GameSpec& base, std::uint64_t seed);
// The spec restricted to a subset of its suits, in the given order.
GameSpec WithSuits(const GameSpec& spec, const std::vector<std::string>& suits);

// One round with the shipped random policies.
RoundLog SimulateRound(const GameSpec& spec, std::int64_t seed);
// `rounds` rounds whose seeds derive from `seed` and the round index.
std::vector<RoundLog> SimulateRounds(const GameSpec& spec, int rounds, std::int64_t seed);

// Strongest combination shown down under the first strategy, or "none".
std::string RoundOutcome(const RoundLog& log);

// A balancing category: rounds whose outcome is `outcome` and which contain
// a transition of kind `step` (any kind when unset).
struct BalanceTarget {
  std::string outcome;
  std::optional<StepKind> step;
  double weight = 1;

  bool operator==(const BalanceTarget&) const = default;
};

// "weight step outcome" per line, step being a flow kind or "*"; '#'
// starts a comment. Throws Error(kInvalidArgument, line).
std::vector<BalanceTarget> ParseBalanceTargets(std::string_view text);
std::string RenderBalanceTargets(const std::vector<BalanceTarget>& targets);

// Index of the first target a round falls into, if any.
std::optional<int> MatchTarget(const RoundLog& log, const std::vector<BalanceTarget>& targets);

// Resamples rounds toward the target weights. Rounds matching no target
// pass through once. Matched rounds are repeated or dropped so that each
// category holds round(M * weight / total weight) rounds, M being the
// number of matched input rounds. Output keeps input order; every output
// round is a copy of an input round. Throws Error(kEmptyCategory) naming a
// target no round matches, Error(kInvalidArgument) for empty input or a
// non-positive weight.
std::vector<RoundLog> Balance(const std::vector<RoundLog>& logs, const std::vector<BalanceTarget>& targets,
                              std::uint64_t seed);

// One record per transition.
std::vector<SampleRecord> EmitSamples(const RoundLog& log, SampleMode mode, std::int64_t round_id);

struct CorpusOptions {
  // Preset names; each contributes `rounds` rounds. Ignored when variants > 0.
  std::vector<std::string> presets;
  // Number of sampled variants drawn round-robin over every preset.
  int variants = 0;
  int rounds = 20;
  std::vector<SampleMode> modes = {SampleMode::kDsp};
  std::vector<BalanceTarget> targets;
  std::int64_t seed = 0;
  // Truncate to exactly this many samples; 0 keeps all. When more are
  // requested than the rounds yield, additional rounds are simulated.
  std::size_t max_samples = 0;
};

// Simulate, balance, shuffle rounds with a seeded order, emit. Round ids are
// positions in that order.
std::vector<SampleRecord> BuildCorpus(const CorpusOptions& options);

// A natural-language instruction for one core function with concrete
// arguments, and the behavior it must produce.
struct CoreSetPair {
  std::string function;
  std::string call;  // the diff call line the instruction describes
  std::string instruction;
  std::string behavior;

  bool operator==(const CoreSetPair&) const = default;
};

std::string CoreSetPairToJson(const CoreSetPair& pair);

// n pairs cycling through the registry, with randomized arguments and
// phrasing.
std::vector<CoreSetPair> EmitCoreSet(const std::vector<CoreFunction>& registry, int n, std::uint64_t seed);

struct SegmentPolicy {
  // Sentences per chunk, drawn uniformly.
  int min_sentences = 1;
  int max_sentences = 3;
  // Probability that a chunk is marked when not every chunk is.
  double rephrase_prob = 0.3;
  // Probability that every chunk is marked.
  double all_marked_prob = 0.01;
};

struct Segmentation {
  std::vector<std::string> chunks;
  std::vector<bool> rephrase;
};

// Splits at line ends and sentence ends; chunks concatenate to the input.
Segmentation SegmentScript(std::string_view text, const SegmentPolicy& policy, std::uint64_t seed);

struct ModeStats {
  std::size_t samples = 0;
  std::size_t rounds = 0;
  double mean_script_chars = 0;
  double mean_input_chars = 0;
  double mean_prev_chars = 0;
  double mean_target_chars = 0;
  double mean_states_per_round = 0;
};

struct CorpusStats {
  std::size_t samples = 0;
  ModeStats nsp;
  ModeStats dsp;
  // Samples per flow kind, in report order.
  std::vector<std::size_t> per_category = std::vector<std::size_t>(kNumStepKinds, 0);
};

CorpusStats ComputeCorpusStats(const std::vector<SampleRecord>& samples);
// Stable JSON rendering.
std::string RenderCorpusStats(const CorpusStats& stats);

}  // namespace pokerforge

#endif  // POKERFORGE_DATAGEN_DATAGEN_H_
