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

#include "pokerforge/pokerforge.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include <json.hpp>

#include "common/error.h"
#include "common/strings.h"
#include "datagen/datagen.h"
#include "diff/core_registry.h"
#include "diff/diff.h"
#include "engine/engine.h"
#include "eval/eval.h"
#include "hand/hand_eval.h"
#include "play/http_server.h"
#include "play/session.h"
#include "script/presets.h"
#include "script/script.h"
#include "state/game_state.h"

using pokerforge::ErrorCode;
using Json = nlohmann::ordered_json;

struct pkf_spec {
  pokerforge::GameSpec spec;
};

struct pkf_state {
  pokerforge::GameState state;
};

struct pkf_server {
  std::unique_ptr<pokerforge::SessionManager> sessions;
  std::unique_ptr<pokerforge::HttpServer> http;
  std::thread thread;
};

static_assert(static_cast<int>(ErrorCode::kInvalidArgument) == PKF_INVALID_ARGUMENT);
static_assert(static_cast<int>(ErrorCode::kIllegalAction) == PKF_ILLEGAL_ACTION);
static_assert(static_cast<int>(ErrorCode::kCorpusMismatch) == PKF_CORPUS_MISMATCH);
static_assert(static_cast<int>(ErrorCode::kIo) == PKF_IO);

namespace {

thread_local std::string g_error;
thread_local int g_error_line = 0;

pkf_status SetError(pkf_status status, std::string message, int line = 0) {
  g_error = std::move(message);
  g_error_line = line;
  return status;
}

// Runs `f`, mapping library errors onto status codes.
template <typename F>
pkf_status Guard(F&& f) {
  g_error.clear();
  g_error_line = 0;
  try {
    f();
    return PKF_OK;
  } catch (const pokerforge::Error& e) {
    return SetError(static_cast<pkf_status>(e.code()), e.what(), e.line());
  } catch (const nlohmann::json::exception& e) {
    return SetError(PKF_INVALID_ARGUMENT, std::string("InvalidArgument: ") + e.what());
  } catch (const std::bad_alloc&) {
    return SetError(PKF_INTERNAL, "Internal: out of memory");
  } catch (const std::exception& e) {
    return SetError(PKF_INTERNAL, std::string("Internal: ") + e.what());
  }
}

void Require(bool ok, const char* what) {
  if (!ok) pokerforge::Fail(ErrorCode::kInvalidArgument, std::string(what) + " must not be NULL");
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pokerforge::SampleMode Mode(pkf_mode mode) {
  switch (mode) {
    case PKF_MODE_NSP: return pokerforge::SampleMode::kNsp;
    case PKF_MODE_DSP: return pokerforge::SampleMode::kDsp;
  }
  pokerforge::Fail(ErrorCode::kInvalidArgument, "unknown mode");
}

std::string RenderViolations(const pokerforge::Violations& violations) {
  std::string out;
  for (const auto& v : violations) out += v.code + ": " + v.message + "\n";
  return out;
}

pokerforge::Cards CardsFromText(const char* text) {
  pokerforge::Cards out;
  if (!text) return out;
  for (auto& tok : pokerforge::SplitWords(text)) out.push_back(pokerforge::Card{tok});
  return out;
}

}  // namespace

extern "C" {

const char* pkf_version(void) { return "0.1.0"; }

const char* pkf_status_name(pkf_status status) {
  if (status == PKF_OK) return "Ok";
  if (status == PKF_INTERNAL) return "Internal";
  if (status < PKF_INVALID_ARGUMENT || status > PKF_IO) return "Unknown";
  return pokerforge::ErrorCodeName(static_cast<ErrorCode>(status)).data();
}

const char* pkf_last_error(void) { return g_error.c_str(); }

int pkf_last_error_line(void) { return g_error_line; }

void pkf_string_free(char* s) { std::free(s); }

pkf_status pkf_spec_parse(const char* script, pkf_spec** out) {
  return Guard([&] {
    Require(script && out, "script and out");
    *out = new pkf_spec{pokerforge::ParseScript(script)};
  });
}

pkf_status pkf_spec_preset(const char* name, pkf_spec** out) {
  return Guard([&] {
    Require(name && out, "name and out");
    *out = new pkf_spec{pokerforge::LoadPreset(name)};
  });
}

void pkf_spec_free(pkf_spec* spec) { delete spec; }

pkf_status pkf_spec_render(const pkf_spec* spec, char** script_out) {
  return Guard([&] {
    Require(spec && script_out, "spec and script_out");
    *script_out = Dup(pokerforge::RenderScript(spec->spec));
  });
}

pkf_status pkf_spec_validate(const pkf_spec* spec, char** violations_out) {
  return Guard([&] {
    Require(spec && violations_out, "spec and violations_out");
    *violations_out = Dup(RenderViolations(pokerforge::ValidateSpec(spec->spec)));
  });
}

pkf_status pkf_spec_name(const pkf_spec* spec, char** name_out) {
  return Guard([&] {
    Require(spec && name_out, "spec and name_out");
    *name_out = Dup(spec->spec.name);
  });
}

int pkf_spec_num_players(const pkf_spec* spec) { return spec ? spec->spec.num_players : -1; }

pkf_status pkf_preset_names(char** names_out) {
  return Guard([&] {
    Require(names_out, "names_out");
    std::string out;
    for (const auto& n : pokerforge::PresetNames()) out += n + "\n";
    *names_out = Dup(out);
  });
}

pkf_status pkf_preset_script(const char* name, char** script_out) {
  return Guard([&] {
    Require(name && script_out, "name and script_out");
    *script_out = Dup(std::string(pokerforge::PresetScript(name)));
  });
}

pkf_status pkf_spec_sample_variant(const pkf_spec* base, uint64_t seed, pkf_spec** out) {
  return Guard([&] {
    Require(base && out, "base and out");
    *out = new pkf_spec{pokerforge::SampleVariant(base->spec, seed)};
  });
}

pkf_status pkf_state_init(const pkf_spec* spec, int64_t seed, pkf_state** out) {
  return Guard([&] {
    Require(spec && out, "spec and out");
    *out = new pkf_state{pokerforge::InitRound(spec->spec, seed)};
  });
}

pkf_status pkf_state_parse(const char* text, pkf_state** out) {
  return Guard([&] {
    Require(text && out, "text and out");
    *out = new pkf_state{pokerforge::ParseState(text)};
  });
}

void pkf_state_free(pkf_state* state) { delete state; }

pkf_status pkf_state_serialize(const pkf_state* state, char** text_out) {
  return Guard([&] {
    Require(state && text_out, "state and text_out");
    *text_out = Dup(pokerforge::SerializeState(state->state));
  });
}

pkf_status pkf_state_view(const pkf_state* state, int player, pkf_state** out) {
  return Guard([&] {
    Require(state && out, "state and out");
    *out = new pkf_state{pokerforge::ViewForPlayer(state->state, player)};
  });
}

pkf_status pkf_state_validate(const pkf_spec* spec, const pkf_state* state, char** violations_out) {
  return Guard([&] {
    Require(spec && state && violations_out, "spec, state and violations_out");
    *violations_out = Dup(RenderViolations(pokerforge::ValidateState(spec->spec, state->state)));
  });
}

int pkf_state_is_terminal(const pkf_spec* spec, const pkf_state* state) {
  int result = -1;
  Guard([&] {
    Require(spec && state, "spec and state");
    result = pokerforge::NextStep(spec->spec, state->state).has_value() ? 0 : 1;
  });
  return result;
}

int pkf_state_current_actor(const pkf_state* state) {
  return state && state->state.current_actor ? *state->state.current_actor : -1;
}

pkf_status pkf_legal_actions(const pkf_spec* spec, const pkf_state* state, char** actions_out) {
  return Guard([&] {
    Require(spec && state && actions_out, "spec, state and actions_out");
    std::string out;
    for (const auto& a : pokerforge::LegalActions(spec->spec, state->state)) out += pokerforge::RenderInput(a) + "\n";
    *actions_out = Dup(out);
  });
}

pkf_status pkf_step(const pkf_spec* spec, const pkf_state* state, const char* input, pkf_state** next_out,
                    char** diff_out, char** category_out) {
  return Guard([&] {
    Require(spec && state && input && next_out, "spec, state, input and next_out");
    auto result = pokerforge::Step(spec->spec, state->state, pokerforge::ParseInput(input));
    std::unique_ptr<char, decltype(&std::free)> diff(
        diff_out ? Dup(pokerforge::RenderDiff(result.diff)) : nullptr, &std::free);
    std::unique_ptr<char, decltype(&std::free)> category(
        category_out ? Dup(std::string(pokerforge::StepKindName(result.category))) : nullptr, &std::free);
    *next_out = new pkf_state{std::move(result.next)};
    if (diff_out) *diff_out = diff.release();
    if (category_out) *category_out = category.release();
  });
}

pkf_status pkf_diff_compute(const pkf_state* prev, const pkf_state* next, char** diff_out) {
  return Guard([&] {
    Require(prev && next && diff_out, "prev, next and diff_out");
    *diff_out = Dup(pokerforge::RenderDiff(pokerforge::ComputeDiff(prev->state, next->state)));
  });
}

pkf_status pkf_diff_merge(const pkf_spec* spec, const pkf_state* prev, const char* diff, pkf_state** out) {
  return Guard([&] {
    Require(spec && prev && diff && out, "spec, prev, diff and out");
    *out = new pkf_state{pokerforge::Merge(spec->spec, prev->state, pokerforge::ParseDiff(diff))};
  });
}

pkf_status pkf_diff_equivalent(const pkf_spec* spec, const char* pred, const char* gold, const pkf_state* prev,
                               int* equivalent_out, char** detail_out) {
  return Guard([&] {
    Require(spec && pred && gold && prev && equivalent_out, "spec, pred, gold, prev and equivalent_out");
    const auto eq = pokerforge::Equivalent(spec->spec, pred, gold, prev->state);
    if (detail_out) *detail_out = Dup(Json{{"reason", eq.reason}, {"key", eq.key}, {"detail", eq.detail}}.dump());
    *equivalent_out = eq.equivalent ? 1 : 0;
  });
}

pkf_status pkf_invoke_core(const pkf_spec* spec, const pkf_state* state, const char* fn, const char* args,
                           pkf_state** out) {
  return Guard([&] {
    Require(spec && state && fn && out, "spec, state, fn and out");
    std::string line = std::string("call ") + fn + " " + (args ? args : "");
    const auto diff = pokerforge::ParseDiff(line);
    if (diff.ops.size() != 1) pokerforge::Fail(ErrorCode::kMalformedOp, "expected one call");
    *out = new pkf_state{pokerforge::InvokeCore(spec->spec, fn, diff.ops[0].args, state->state)};
  });
}

pkf_status pkf_core_manifest(char** manifest_out) {
  return Guard([&] {
    Require(manifest_out, "manifest_out");
    *manifest_out = Dup(pokerforge::CoreManifest());
  });
}

pkf_status pkf_best_hand(const pkf_spec* spec, int strategy, const char* hole, const char* community,
                         char** hand_out) {
  return Guard([&] {
    Require(spec && hand_out, "spec and hand_out");
    const auto& strategies = spec->spec.strategies;
    if (strategy < 0 || static_cast<std::size_t>(strategy) >= strategies.size()) {
      pokerforge::Fail(ErrorCode::kInvalidArgument, "no strategy " + std::to_string(strategy));
    }
    const auto hand =
        pokerforge::BestHand(spec->spec, strategies[strategy], CardsFromText(hole), CardsFromText(community));
    Json cards = Json::array();
    for (const auto& c : hand.cards) cards.push_back(c.token);
    *hand_out = Dup(Json{{"combination", hand.name}, {"cards", cards}}.dump());
  });
}

pkf_status pkf_simulate(const pkf_spec* spec, int rounds, int64_t seed, pkf_mode mode, char** corpus_out) {
  return Guard([&] {
    Require(spec && corpus_out, "spec and corpus_out");
    if (rounds < 0) pokerforge::Fail(ErrorCode::kInvalidArgument, "rounds must be non-negative");
    const auto m = Mode(mode);
    std::vector<pokerforge::SampleRecord> samples;
    const auto logs = pokerforge::SimulateRounds(spec->spec, rounds, seed);
    for (std::size_t i = 0; i < logs.size(); ++i) {
      auto part = pokerforge::EmitSamples(logs[i], m, static_cast<std::int64_t>(i));
      samples.insert(samples.end(), part.begin(), part.end());
    }
    *corpus_out = Dup(pokerforge::RenderCorpus(samples));
  });
}

pkf_status pkf_build_corpus(const char* options_json, char** corpus_out) {
  return Guard([&] {
    Require(options_json && corpus_out, "options_json and corpus_out");
    const Json j = Json::parse(options_json);
    if (!j.is_object()) pokerforge::Fail(ErrorCode::kInvalidArgument, "options must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      static const char* kKnown[] = {"presets", "variants", "rounds", "modes", "balance", "seed", "samples"};
      if (std::find_if(std::begin(kKnown), std::end(kKnown), [&](const char* k) { return key == k; }) ==
          std::end(kKnown)) {
        pokerforge::Fail(ErrorCode::kInvalidArgument, "unknown option '" + key + "'");
      }
    }
    pokerforge::CorpusOptions o;
    o.presets = j.value("presets", pokerforge::PresetNames());
    o.variants = j.value("variants", 0);
    o.rounds = j.value("rounds", 20);
    if (j.contains("modes")) {
      o.modes.clear();
      for (const auto& m : j["modes"]) o.modes.push_back(pokerforge::ParseSampleMode(m.get<std::string>()));
    }
    if (j.contains("balance")) o.targets = pokerforge::ParseBalanceTargets(j["balance"].get<std::string>());
    o.seed = j.value("seed", std::int64_t{0});
    o.max_samples = j.value("samples", std::size_t{0});
    *corpus_out = Dup(pokerforge::RenderCorpus(pokerforge::BuildCorpus(o)));
  });
}

pkf_status pkf_corpus_stats(const char* corpus, char** stats_out) {
  return Guard([&] {
    Require(corpus && stats_out, "corpus and stats_out");
    *stats_out = Dup(pokerforge::RenderCorpusStats(pokerforge::ComputeCorpusStats(pokerforge::ParseCorpus(corpus))));
  });
}

pkf_status pkf_core_set(int n, uint64_t seed, char** pairs_out) {
  return Guard([&] {
    Require(pairs_out, "pairs_out");
    if (n < 0) pokerforge::Fail(ErrorCode::kInvalidArgument, "n must be non-negative");
    std::string out;
    for (const auto& p : pokerforge::EmitCoreSet(pokerforge::CoreRegistry(), n, seed)) {
      out += pokerforge::CoreSetPairToJson(p) + "\n";
    }
    *pairs_out = Dup(out);
  });
}

pkf_status pkf_segment_script(const char* text, int min_sentences, int max_sentences, double rephrase_prob,
                              double all_marked_prob, uint64_t seed, char** segments_out) {
  return Guard([&] {
    Require(text && segments_out, "text and segments_out");
    pokerforge::SegmentPolicy policy{min_sentences, max_sentences, rephrase_prob, all_marked_prob};
    const auto seg = pokerforge::SegmentScript(text, policy, seed);
    Json rephrase = Json::array();
    for (bool b : seg.rephrase) rephrase.push_back(b);
    *segments_out = Dup(Json{{"chunks", seg.chunks}, {"rephrase", rephrase}}.dump());
  });
}

pkf_status pkf_evaluate(const char* gold_corpus, const char* predictions, pkf_mode mode, char** report_out,
                        char** report_json_out) {
  return Guard([&] {
    Require(gold_corpus && predictions, "gold_corpus and predictions");
    const auto report = pokerforge::ScoreStates(pokerforge::ParseCorpus(gold_corpus),
                                                pokerforge::ParsePredictions(predictions), Mode(mode));
    std::unique_ptr<char, decltype(&std::free)> text(report_out ? Dup(pokerforge::RenderReport(report)) : nullptr,
                                                     &std::free);
    if (report_json_out) *report_json_out = Dup(pokerforge::RenderReportJson(report));
    if (report_out) *report_out = text.release();
  });
}

pkf_status pkf_mutate_predictions(const char* gold_corpus, pkf_mode mode, const char* category, int every,
                                  char** predictions_out) {
  return Guard([&] {
    Require(gold_corpus && predictions_out, "gold_corpus and predictions_out");
    const auto gold = pokerforge::ParseCorpus(gold_corpus);
    const auto m = Mode(mode);
    std::vector<pokerforge::PredictionRecord> preds;
    if (category && every > 0) {
      const auto kind = pokerforge::StepKindFromName(category);
      if (!kind) pokerforge::Fail(ErrorCode::kUnknownSymbol, std::string("unknown category '") + category + "'");
      preds = pokerforge::MutatePredictions(gold, m, *kind, every);
    } else {
      preds = pokerforge::GoldPredictions(gold, m);
    }
    *predictions_out = Dup(pokerforge::RenderPredictions(preds));
  });
}

pkf_status pkf_server_start(const char* host, int port, const char* data_dir, const char* static_dir,
                            pkf_server** out, int* port_out) {
  return Guard([&] {
    Require(out, "out");
    auto server = std::make_unique<pkf_server>();
    std::optional<std::filesystem::path> data;
    if (data_dir) data = data_dir;
    std::optional<std::filesystem::path> web;
    if (static_dir) web = static_dir;
    server->sessions = std::make_unique<pokerforge::SessionManager>(data);
    if (data) server->sessions->Restore();
    server->http = std::make_unique<pokerforge::HttpServer>(*server->sessions, web);
    const std::string h = host ? host : "127.0.0.1";
    int bound = port;
    if (port == 0) {
      bound = server->http->BindAnyPort(h);
      if (bound < 0) pokerforge::Fail(ErrorCode::kIo, "cannot bind " + h);
    } else if (!server->http->Bind(h, port)) {
      pokerforge::Fail(ErrorCode::kIo, "cannot bind " + h + ":" + std::to_string(port));
    }
    auto* http = server->http.get();
    server->thread = std::thread([http] { http->Serve(); });
    http->WaitUntilReady();
    if (port_out) *port_out = bound;
    *out = server.release();
  });
}

pkf_status pkf_server_wait(pkf_server* server) {
  return Guard([&] {
    Require(server, "server");
    if (server->thread.joinable()) server->thread.join();
  });
}

void pkf_server_stop(pkf_server* server) {
  if (server && server->http) server->http->Stop();
}

void pkf_server_free(pkf_server* server) {
  if (!server) return;
  pkf_server_stop(server);
  if (server->thread.joinable()) server->thread.join();
  delete server;
}

}  // extern "C"
