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

#ifndef POKERFORGE_EVAL_EVAL_H_
#define POKERFORGE_EVAL_EVAL_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "datagen/datagen.h"

namespace pokerforge {

// A predictor's answer for one gold transition.
struct PredictionRecord {
  std::int64_t round_id = 0;
  int step_idx = 0;
  std::string predicted;

  bool operator==(const PredictionRecord&) const = default;
};

std::string PredictionToJson(const PredictionRecord& p);
// Throws Error(kInvalidArgument).
PredictionRecord PredictionFromJson(std::string_view line);
std::string RenderPredictions(const std::vector<PredictionRecord>& preds);
std::vector<PredictionRecord> ParsePredictions(std::string_view text);

struct CategoryScore {
  std::size_t correct = 0;
  std::size_t total = 0;

  double Accuracy() const { return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total); }
};

struct RoundScore {
  std::size_t success = 0;
  std::size_t total = 0;

  double Rate() const { return total == 0 ? 0.0 : static_cast<double>(success) / static_cast<double>(total); }
};

struct Failure {
  std::int64_t round_id = 0;
  int step_idx = 0;
  StepKind category = StepKind::kStart;
  // "missing", "parse_error", "merge_error" or "state_mismatch".
  std::string reason;
  std::string key;
};

struct ScoreReport {
  SampleMode mode = SampleMode::kDsp;
  // Indexed like kAllStepKinds.
  std::array<CategoryScore, kNumStepKinds> categories{};
  RoundScore rounds;
  // Per game name.
  std::map<std::string, RoundScore> per_game;
  // First failures in gold order.
  std::vector<Failure> failures;
  std::size_t failure_count = 0;

  const CategoryScore& Category(StepKind kind) const;
};

inline constexpr std::size_t kMaxFailureExemplars = 20;

// Scores every gold record of the given mode. DSP predictions are judged by
// execution equivalence on the gold prev_state; NSP predictions by equality
// of parsed states. Missing or unparsable predictions are wrong. Throws
// Error(kCorpusMismatch) naming the round for a prediction with no gold
// counterpart or a duplicated prediction.
ScoreReport ScoreStates(const std::vector<SampleRecord>& gold, const std::vector<PredictionRecord>& preds,
                        SampleMode mode);

// Fixed-width table: category header, accuracy and count rows, then one
// row per game with round-level success. An empty report renders the
// category header only.
std::string RenderReport(const ScoreReport& report);
std::string RenderReportJson(const ScoreReport& report);

// Predictions equal to the gold targets.
std::vector<PredictionRecord> GoldPredictions(const std::vector<SampleRecord>& gold, SampleMode mode);

// A wrong but well-formed prediction for a gold record: the raises counter
// is set to a value no engine produces.
std::string CorruptTarget(const SampleRecord& gold);

// Gold predictions with every k-th record of `category` (0-based count
// 0, k, 2k, ...) corrupted.
std::vector<PredictionRecord> MutatePredictions(const std::vector<SampleRecord>& gold, SampleMode mode,
                                                StepKind category, int every);

}  // namespace pokerforge

#endif  // POKERFORGE_EVAL_EVAL_H_
