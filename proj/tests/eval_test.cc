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

#include "eval/eval.h"
#include "script/presets.h"

namespace pokerforge {
namespace {

class EvalTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    CorpusOptions opt;
    opt.rounds = 2;
    opt.modes = {SampleMode::kNsp, SampleMode::kDsp};
    opt.seed = 31;
    gold_ = new std::vector<SampleRecord>(BuildCorpus(opt));
  }
  static void TearDownTestSuite() { delete gold_; }

  static std::vector<SampleRecord>* gold_;
};

std::vector<SampleRecord>* EvalTest::gold_ = nullptr;

TEST_F(EvalTest, GoldAgainstGold) {
  for (SampleMode mode : {SampleMode::kNsp, SampleMode::kDsp}) {
    ScoreReport r = ScoreStates(*gold_, GoldPredictions(*gold_, mode), mode);
    for (const auto& c : r.categories) {
      EXPECT_GT(c.total, 0u);
      EXPECT_EQ(c.correct, c.total);
    }
    EXPECT_EQ(r.rounds.total, 20u);
    EXPECT_EQ(r.rounds.success, 20u);
    EXPECT_EQ(r.per_game.size(), PresetNames().size());
    for (const auto& [game, g] : r.per_game) EXPECT_EQ(g.success, 2u) << game;
    EXPECT_TRUE(r.failures.empty());
  }
}

TEST_F(EvalTest, OneInTenDealsCorrupted) {
  for (SampleMode mode : {SampleMode::kNsp, SampleMode::kDsp}) {
    ScoreReport r = ScoreStates(*gold_, MutatePredictions(*gold_, mode, StepKind::kDeal, 10), mode);
    const auto& deal = r.Category(StepKind::kDeal);
    ASSERT_EQ(deal.total, 20u);
    EXPECT_EQ(deal.correct, 18u);
    EXPECT_DOUBLE_EQ(deal.Accuracy(), 0.9);
    for (StepKind k : kAllStepKinds) {
      if (k != StepKind::kDeal) EXPECT_EQ(r.Category(k).correct, r.Category(k).total);
    }
    EXPECT_EQ(r.rounds.success, 18u);
    ASSERT_EQ(r.failures.size(), 2u);
    EXPECT_EQ(r.failures[0].reason, "state_mismatch");
    EXPECT_EQ(r.failures[0].key, "raises");
  }
}

TEST_F(EvalTest, MissingPredictionsAreWrong) {
  auto preds = GoldPredictions(*gold_, SampleMode::kDsp);
  preds.erase(preds.begin());
  ScoreReport r = ScoreStates(*gold_, preds, SampleMode::kDsp);
  EXPECT_EQ(r.Category(StepKind::kStart).correct + 1, r.Category(StepKind::kStart).total);
  EXPECT_EQ(r.failures.at(0).reason, "missing");
  EXPECT_EQ(r.rounds.success, 19u);
}

TEST_F(EvalTest, UnparsablePredictions) {
  for (SampleMode mode : {SampleMode::kNsp, SampleMode::kDsp}) {
    auto preds = GoldPredictions(*gold_, mode);
    preds[3].predicted = "certainly! here is the next state";
    ScoreReport r = ScoreStates(*gold_, preds, mode);
    EXPECT_EQ(r.failure_count, 1u);
    EXPECT_EQ(r.failures.at(0).reason, "parse_error");
  }
}

TEST_F(EvalTest, CorpusMismatch) {
  auto preds = GoldPredictions(*gold_, SampleMode::kDsp);
  preds.push_back({999, 0, ""});
  try {
    ScoreStates(*gold_, preds, SampleMode::kDsp);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCorpusMismatch);
    EXPECT_NE(std::string(e.what()).find("999"), std::string::npos);
  }
  preds.pop_back();
  preds.push_back(preds.front());
  EXPECT_THROW(ScoreStates(*gold_, preds, SampleMode::kDsp), Error);
}

TEST_F(EvalTest, MonotoneUnderMoreCorruption) {
  const SampleMode mode = SampleMode::kDsp;
  ScoreReport prev = ScoreStates(*gold_, GoldPredictions(*gold_, mode), mode);
  for (int every : {10, 5, 2, 1}) {
    auto preds = GoldPredictions(*gold_, mode);
    // Corrupt each k-th prediction regardless of category; sets are nested.
    for (std::size_t i = 0; i < preds.size(); i += 10 / std::max(1, 10 / every)) {
      for (const auto& g : *gold_) {
        if (g.mode == mode && g.round_id == preds[i].round_id && g.step_idx == preds[i].step_idx) {
          preds[i].predicted = CorruptTarget(g);
        }
      }
    }
    ScoreReport r = ScoreStates(*gold_, preds, mode);
    for (std::size_t c = 0; c < kNumStepKinds; ++c) EXPECT_LE(r.categories[c].correct, prev.categories[c].correct);
    EXPECT_LE(r.rounds.success, prev.rounds.success);
    // A round succeeds only if all of its states do.
    double min_acc = 1;
    for (const auto& c : r.categories) min_acc = std::min(min_acc, c.Accuracy());
    EXPECT_LE(r.rounds.Rate(), min_acc + 1e-12);
    prev = r;
  }
  EXPECT_EQ(prev.rounds.success, 0u);
}

TEST(Report, EmptyIsHeaderOnly) {
  const std::string text = RenderReport(ScoreReport{});
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
  std::size_t pos = 0;
  for (StepKind k : kAllStepKinds) {
    std::size_t at = text.find(std::string(StepKindName(k)), pos);
    ASSERT_NE(at, std::string::npos) << StepKindName(k);
    pos = at;
  }
}

TEST_F(EvalTest, ReportIsDeterministic) {
  ScoreReport r = ScoreStates(*gold_, MutatePredictions(*gold_, SampleMode::kDsp, StepKind::kBet, 7),
                              SampleMode::kDsp);
  EXPECT_EQ(RenderReport(r), RenderReport(r));
  EXPECT_EQ(RenderReportJson(r), RenderReportJson(r));
  const std::string header = RenderReport(r).substr(0, RenderReport(r).find('\n'));
  EXPECT_EQ(header, RenderReport(ScoreReport{}).substr(0, RenderReport(ScoreReport{}).find('\n')));
  EXPECT_NE(RenderReport(r).find("failures"), std::string::npos);
}

TEST(Predictions, JsonRoundTrip) {
  std::vector<PredictionRecord> preds = {{1, 2, "#diff v1\nset raises 1\n"}, {3, 0, ""}};
  EXPECT_EQ(ParsePredictions(RenderPredictions(preds)), preds);
  EXPECT_THROW(ParsePredictions("{\"round_id\": \"x\"}"), Error);
}

}  // namespace
}  // namespace pokerforge
