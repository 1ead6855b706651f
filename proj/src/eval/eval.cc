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

#include "eval/eval.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <memory>
#include <unordered_map>

#include <json.hpp>

#include "common/strings.h"
#include "diff/diff.h"
#include "script/script.h"

namespace pokerforge {

using Json = nlohmann::ordered_json;

std::string PredictionToJson(const PredictionRecord& p) {
  Json j;
  j["round_id"] = p.round_id;
  j["step_idx"] = p.step_idx;
  j["predicted"] = p.predicted;
  return j.dump();
}

PredictionRecord PredictionFromJson(std::string_view line) {
  try {
    Json j = Json::parse(line);
    PredictionRecord p;
    p.round_id = j.at("round_id").get<std::int64_t>();
    p.step_idx = j.at("step_idx").get<int>();
    p.predicted = j.at("predicted").get<std::string>();
    return p;
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kInvalidArgument, std::string("bad prediction record: ") + e.what());
  }
}

std::string RenderPredictions(const std::vector<PredictionRecord>& preds) {
  std::string out;
  for (const auto& p : preds) out += PredictionToJson(p) + "\n";
  return out;
}

std::vector<PredictionRecord> ParsePredictions(std::string_view text) {
  std::vector<PredictionRecord> out;
  int line_no = 0;
  for (const auto& line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      out.push_back(PredictionFromJson(line));
    } catch (const Error& e) {
      Fail(e.code(), e.what(), line_no);
    }
  }
  return out;
}

namespace {

std::size_t CategoryIndex(StepKind kind) {
  return static_cast<std::size_t>(std::find(std::begin(kAllStepKinds), std::end(kAllStepKinds), kind) -
                                  std::begin(kAllStepKinds));
}

using Key = std::pair<std::int64_t, int>;

struct Verdict {
  bool correct = false;
  std::string reason;
  std::string key;
};

Verdict Judge(const GameSpec& spec, const SampleRecord& gold, const std::string& predicted) {
  Verdict v;
  if (gold.mode == SampleMode::kDsp) {
    Equivalence e = Equivalent(spec, predicted, gold.target, ParseState(gold.prev_state));
    v.correct = e.equivalent;
    v.reason = e.reason;
    v.key = e.key;
    return v;
  }
  GameState want = ParseState(gold.target);
  try {
    GameState got = ParseState(predicted);
    v.correct = got == want;
    if (!v.correct) {
      v.reason = "state_mismatch";
      v.key = FirstDifferingKey(got, want);
    }
  } catch (const Error&) {
    v.reason = "parse_error";
  }
  return v;
}

}  // namespace

const CategoryScore& ScoreReport::Category(StepKind kind) const { return categories[CategoryIndex(kind)]; }

ScoreReport ScoreStates(const std::vector<SampleRecord>& gold, const std::vector<PredictionRecord>& preds,
                        SampleMode mode) {
  ScoreReport report;
  report.mode = mode;
  std::map<Key, const SampleRecord*> by_key;
  for (const auto& g : gold) {
    if (g.mode == mode) by_key[{g.round_id, g.step_idx}] = &g;
  }
  std::map<Key, const std::string*> predicted;
  for (const auto& p : preds) {
    const Key k{p.round_id, p.step_idx};
    if (!by_key.count(k)) {
      Fail(ErrorCode::kCorpusMismatch, "round " + std::to_string(p.round_id) + " step " +
                                           std::to_string(p.step_idx) + " has no gold record");
    }
    if (!predicted.emplace(k, &p.predicted).second) {
      Fail(ErrorCode::kCorpusMismatch,
           "round " + std::to_string(p.round_id) + " step " + std::to_string(p.step_idx) + " predicted twice");
    }
  }

  std::unordered_map<std::string, std::unique_ptr<GameSpec>> specs;
  struct RoundAcc {
    std::string game;
    bool ok = true;
  };
  std::map<std::int64_t, RoundAcc> rounds;
  for (const auto& g : gold) {
    if (g.mode != mode) continue;
    auto& slot = specs[g.script];
    if (!slot) slot = std::make_unique<GameSpec>(ParseScript(g.script));
    Verdict v;
    auto it = predicted.find({g.round_id, g.step_idx});
    if (it == predicted.end()) {
      v.reason = "missing";
    } else {
      v = Judge(*slot, g, *it->second);
    }
    CategoryScore& cat = report.categories[CategoryIndex(g.category)];
    ++cat.total;
    RoundAcc& r = rounds[g.round_id];
    r.game = g.game;
    if (v.correct) {
      ++cat.correct;
      continue;
    }
    r.ok = false;
    ++report.failure_count;
    if (report.failures.size() < kMaxFailureExemplars) {
      report.failures.push_back({g.round_id, g.step_idx, g.category, v.reason, v.key});
    }
  }
  for (const auto& [id, r] : rounds) {
    ++report.rounds.total;
    ++report.per_game[r.game].total;
    if (r.ok) {
      ++report.rounds.success;
      ++report.per_game[r.game].success;
    }
  }
  return report;
}

namespace {

std::string Pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string Percent(double x) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f", 100 * x);
  return buf;
}

}  // namespace

std::string RenderReport(const ScoreReport& report) {
  constexpr std::size_t kLabel = 10;
  constexpr std::size_t kCol = 12;
  std::string out = std::string("category") + std::string(kLabel - 8, ' ');
  for (StepKind k : kAllStepKinds) out += Pad(std::string(StepKindName(k)), kCol);
  out += "\n";
  std::size_t total = 0;
  for (const auto& c : report.categories) total += c.total;
  if (total == 0 && report.rounds.total == 0) return out;

  out += "accuracy  ";
  for (const auto& c : report.categories) out += Pad(c.total ? Percent(c.Accuracy()) : "-", kCol);
  out += "\ncount     ";
  for (const auto& c : report.categories) out += Pad(std::to_string(c.correct) + "/" + std::to_string(c.total), kCol);
  out += "\n\n";

  std::size_t name_width = 8;
  for (const auto& [game, r] : report.per_game) name_width = std::max(name_width, game.size());
  auto row = [&](const std::string& name, const RoundScore& r) {
    return name + std::string(name_width - name.size(), ' ') + Pad(std::to_string(r.success), kCol) +
           Pad(std::to_string(r.total), kCol) + Pad(Percent(r.Rate()), kCol) + "\n";
  };
  out += "game" + std::string(name_width - 4, ' ') + Pad("success", kCol) + Pad("rounds", kCol) + Pad("rate", kCol) + "\n";
  for (const auto& [game, r] : report.per_game) out += row(game, r);
  out += row("all", report.rounds);

  if (!report.failures.empty()) {
    out += "\nfailures (" + std::to_string(report.failure_count) + " total)\n";
    for (const auto& f : report.failures) {
      out += "  round " + std::to_string(f.round_id) + " step " + std::to_string(f.step_idx) + " " +
             std::string(StepKindName(f.category)) + ": " + f.reason + (f.key.empty() ? "" : " at " + f.key) + "\n";
    }
  }
  return out;
}

std::string RenderReportJson(const ScoreReport& report) {
  Json j;
  j["mode"] = SampleModeName(report.mode);
  Json cats = Json::object();
  for (std::size_t i = 0; i < kNumStepKinds; ++i) {
    const auto& c = report.categories[i];
    cats[std::string(StepKindName(kAllStepKinds[i]))] = {{"correct", c.correct}, {"total", c.total}};
  }
  j["categories"] = cats;
  j["rounds"] = {{"success", report.rounds.success}, {"total", report.rounds.total}};
  Json games = Json::object();
  for (const auto& [game, r] : report.per_game) games[game] = {{"success", r.success}, {"total", r.total}};
  j["games"] = games;
  j["failure_count"] = report.failure_count;
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"round_id", f.round_id},
                        {"step_idx", f.step_idx},
                        {"category", StepKindName(f.category)},
                        {"reason", f.reason},
                        {"key", f.key}});
  }
  j["failures"] = failures;
  return j.dump(2) + "\n";
}

std::vector<PredictionRecord> GoldPredictions(const std::vector<SampleRecord>& gold, SampleMode mode) {
  std::vector<PredictionRecord> out;
  for (const auto& g : gold) {
    if (g.mode == mode) out.push_back({g.round_id, g.step_idx, g.target});
  }
  return out;
}

std::string CorruptTarget(const SampleRecord& gold) {
  constexpr int kBogusRaises = 97;
  if (gold.mode == SampleMode::kDsp) {
    std::string text = gold.target;
    if (!text.empty() && text.back() != '\n') text += "\n";
    return text + "set raises " + std::to_string(kBogusRaises) + "\n";
  }
  GameState s = ParseState(gold.target);
  s.raises = kBogusRaises;
  return SerializeState(s);
}

std::vector<PredictionRecord> MutatePredictions(const std::vector<SampleRecord>& gold, SampleMode mode,
                                                StepKind category, int every) {
  std::vector<PredictionRecord> out;
  int seen = 0;
  for (const auto& g : gold) {
    if (g.mode != mode) continue;
    PredictionRecord p{g.round_id, g.step_idx, g.target};
    if (g.category == category && every > 0 && seen++ % every == 0) p.predicted = CorruptTarget(g);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace pokerforge
