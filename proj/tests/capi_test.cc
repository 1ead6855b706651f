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

// Exercises the shared library through its C interface only.
#include <algorithm>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <httplib.h>
#include <json.hpp>

#include "pokerforge/pokerforge.h"

namespace {

using Json = nlohmann::json;

struct SpecDeleter {
  void operator()(pkf_spec* s) const { pkf_spec_free(s); }
};
struct StateDeleter {
  void operator()(pkf_state* s) const { pkf_state_free(s); }
};
using SpecPtr = std::unique_ptr<pkf_spec, SpecDeleter>;
using StatePtr = std::unique_ptr<pkf_state, StateDeleter>;

std::string Take(char* s) {
  std::string out = s ? s : "";
  pkf_string_free(s);
  return out;
}

SpecPtr Preset(const char* name) {
  pkf_spec* spec = nullptr;
  EXPECT_EQ(pkf_spec_preset(name, &spec), PKF_OK) << pkf_last_error();
  return SpecPtr(spec);
}

std::string Serialize(const pkf_state* s) {
  char* text = nullptr;
  EXPECT_EQ(pkf_state_serialize(s, &text), PKF_OK);
  return Take(text);
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(pkf_version(), "0.1.0");
  EXPECT_STREQ(pkf_status_name(PKF_OK), "Ok");
  EXPECT_STREQ(pkf_status_name(PKF_ILLEGAL_ACTION), "IllegalAction");
  EXPECT_STREQ(pkf_status_name(PKF_IO), "Io");
  EXPECT_STREQ(pkf_status_name(PKF_INTERNAL), "Internal");
  EXPECT_STREQ(pkf_status_name(static_cast<pkf_status>(77)), "Unknown");
}

TEST(CApi, NullArgumentsAreRejected) {
  pkf_spec* spec = nullptr;
  EXPECT_EQ(pkf_spec_parse(nullptr, &spec), PKF_INVALID_ARGUMENT);
  EXPECT_EQ(spec, nullptr);
  EXPECT_NE(std::strstr(pkf_last_error(), "NULL"), nullptr);
  EXPECT_EQ(pkf_state_is_terminal(nullptr, nullptr), -1);
  EXPECT_EQ(pkf_spec_num_players(nullptr), -1);
  EXPECT_EQ(pkf_state_current_actor(nullptr), -1);
  pkf_spec_free(nullptr);
  pkf_state_free(nullptr);
  pkf_string_free(nullptr);
}

TEST(CApi, ParseErrorCarriesLine) {
  pkf_spec* spec = nullptr;
  char* script = nullptr;
  ASSERT_EQ(pkf_preset_script("texas", &script), PKF_OK);
  std::string text = Take(script);
  text += "\nbogus section line\n";
  const pkf_status st = pkf_spec_parse(text.c_str(), &spec);
  EXPECT_NE(st, PKF_OK);
  EXPECT_EQ(spec, nullptr);
  EXPECT_GT(pkf_last_error_line(), 0);
  EXPECT_EQ(std::string(pkf_last_error()).rfind(pkf_status_name(st), 0), 0u);

  // A later success clears the error.
  auto ok = Preset("texas");
  EXPECT_STREQ(pkf_last_error(), "");
  EXPECT_EQ(pkf_last_error_line(), 0);
}

TEST(CApi, PresetsRenderAndReparse) {
  char* names = nullptr;
  ASSERT_EQ(pkf_preset_names(&names), PKF_OK);
  const auto list = Lines(Take(names));
  ASSERT_EQ(list.size(), 10u);
  for (const auto& name : list) {
    auto spec = Preset(name.c_str());
    char* violations = nullptr;
    ASSERT_EQ(pkf_spec_validate(spec.get(), &violations), PKF_OK);
    EXPECT_EQ(Take(violations), "") << name;
    char* rendered = nullptr;
    ASSERT_EQ(pkf_spec_render(spec.get(), &rendered), PKF_OK);
    pkf_spec* again = nullptr;
    ASSERT_EQ(pkf_spec_parse(Take(rendered).c_str(), &again), PKF_OK) << pkf_last_error();
    SpecPtr again_ptr(again);
    char* a = nullptr;
    char* b = nullptr;
    ASSERT_EQ(pkf_spec_name(spec.get(), &a), PKF_OK);
    ASSERT_EQ(pkf_spec_name(again, &b), PKF_OK);
    EXPECT_EQ(Take(a), Take(b));
    EXPECT_EQ(pkf_spec_num_players(spec.get()), pkf_spec_num_players(again));
  }
  pkf_spec* missing = nullptr;
  EXPECT_NE(pkf_spec_preset("no-such-game", &missing), PKF_OK);
}

TEST(CApi, VariantIsValid) {
  auto base = Preset("omaha");
  pkf_spec* v = nullptr;
  ASSERT_EQ(pkf_spec_sample_variant(base.get(), 17, &v), PKF_OK);
  SpecPtr variant(v);
  char* violations = nullptr;
  ASSERT_EQ(pkf_spec_validate(variant.get(), &violations), PKF_OK);
  EXPECT_EQ(Take(violations), "");
}

// Plays a round choosing the first legal input and checks each diff.
TEST(CApi, RoundByFirstLegalAction) {
  auto spec = Preset("texas");
  pkf_state* raw = nullptr;
  ASSERT_EQ(pkf_state_init(spec.get(), 11, &raw), PKF_OK);
  StatePtr state(raw);
  int steps = 0;
  std::vector<std::string> categories;
  while (pkf_state_is_terminal(spec.get(), state.get()) == 0) {
    ASSERT_LT(++steps, 500);
    char* legal = nullptr;
    ASSERT_EQ(pkf_legal_actions(spec.get(), state.get(), &legal), PKF_OK);
    const auto actions = Lines(Take(legal));
    const std::string input = actions.empty() ? "none" : actions.front();
    if (!actions.empty()) EXPECT_GE(pkf_state_current_actor(state.get()), 0);

    pkf_state* next = nullptr;
    char* diff = nullptr;
    char* category = nullptr;
    ASSERT_EQ(pkf_step(spec.get(), state.get(), input.c_str(), &next, &diff, &category), PKF_OK) << pkf_last_error();
    StatePtr next_ptr(next);
    const std::string diff_text = Take(diff);
    categories.push_back(Take(category));

    pkf_state* merged = nullptr;
    ASSERT_EQ(pkf_diff_merge(spec.get(), state.get(), diff_text.c_str(), &merged), PKF_OK) << pkf_last_error();
    StatePtr merged_ptr(merged);
    EXPECT_EQ(Serialize(merged), Serialize(next));

    char* computed = nullptr;
    ASSERT_EQ(pkf_diff_compute(state.get(), next, &computed), PKF_OK);
    int eq = 0;
    char* detail = nullptr;
    ASSERT_EQ(pkf_diff_equivalent(spec.get(), Take(computed).c_str(), diff_text.c_str(), state.get(), &eq, &detail),
              PKF_OK);
    EXPECT_EQ(eq, 1) << Take(detail);
    pkf_string_free(detail);

    char* violations = nullptr;
    ASSERT_EQ(pkf_state_validate(spec.get(), next, &violations), PKF_OK);
    EXPECT_EQ(Take(violations), "");
    state = std::move(next_ptr);
  }
  ASSERT_FALSE(categories.empty());
  EXPECT_EQ(categories.back(), "prize");
  EXPECT_EQ(pkf_state_is_terminal(spec.get(), state.get()), 1);
}

TEST(CApi, IllegalStepLeavesOutputsAlone) {
  auto spec = Preset("texas");
  pkf_state* raw = nullptr;
  ASSERT_EQ(pkf_state_init(spec.get(), 3, &raw), PKF_OK);
  StatePtr state(raw);
  pkf_state* next = nullptr;
  char* diff = nullptr;
  EXPECT_EQ(pkf_step(spec.get(), state.get(), "0 raise 5", &next, &diff, nullptr), PKF_ILLEGAL_ACTION);
  EXPECT_EQ(next, nullptr);
  EXPECT_EQ(diff, nullptr);
}

TEST(CApi, StateTextRoundTripsAndViewsHideTheDeck) {
  auto spec = Preset("texas");
  pkf_state* raw = nullptr;
  ASSERT_EQ(pkf_state_init(spec.get(), 9, &raw), PKF_OK);
  StatePtr state(raw);
  const std::string text = Serialize(state.get());
  pkf_state* parsed = nullptr;
  ASSERT_EQ(pkf_state_parse(text.c_str(), &parsed), PKF_OK);
  StatePtr parsed_ptr(parsed);
  EXPECT_EQ(Serialize(parsed), text);

  pkf_state* view = nullptr;
  ASSERT_EQ(pkf_state_view(state.get(), 0, &view), PKF_OK);
  StatePtr view_ptr(view);
  const std::string view_text = Serialize(view);
  EXPECT_EQ(view_text.find("HA"), std::string::npos);

  pkf_state* bad = nullptr;
  EXPECT_EQ(pkf_state_parse("not a state", &bad), PKF_MALFORMED_STATE);
}

TEST(CApi, InvokeCoreShuffleKeepsTheDeckMultiset) {
  auto spec = Preset("texas");
  pkf_state* raw = nullptr;
  ASSERT_EQ(pkf_state_init(spec.get(), 1, &raw), PKF_OK);
  StatePtr state(raw);
  pkf_state* shuffled = nullptr;
  ASSERT_EQ(pkf_invoke_core(spec.get(), state.get(), "shuffle", "seed=42", &shuffled), PKF_OK) << pkf_last_error();
  StatePtr shuffled_ptr(shuffled);
  auto deck_line = [](const std::string& text) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
      if (line.rfind("deck:", 0) == 0) {
        std::istringstream words(line.substr(5));
        std::vector<std::string> cards;
        for (std::string w; words >> w;) cards.push_back(w);
        return cards;
      }
    }
    return std::vector<std::string>{};
  };
  auto before = deck_line(Serialize(state.get()));
  auto after = deck_line(Serialize(shuffled));
  ASSERT_EQ(before.size(), 52u);
  EXPECT_NE(before, after);
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  EXPECT_EQ(before, after);

  pkf_state* out = nullptr;
  EXPECT_EQ(pkf_invoke_core(spec.get(), state.get(), "no_such_fn", "", &out), PKF_UNKNOWN_CORE_FN);
  char* manifest = nullptr;
  ASSERT_EQ(pkf_core_manifest(&manifest), PKF_OK);
  EXPECT_NE(Take(manifest).find("shuffle("), std::string::npos);
}

TEST(CApi, BestHand) {
  auto spec = Preset("texas");
  char* hand = nullptr;
  ASSERT_EQ(pkf_best_hand(spec.get(), 0, "HA HK", "HQ HJ H10 C2 D3", &hand), PKF_OK) << pkf_last_error();
  const Json j = Json::parse(Take(hand));
  EXPECT_EQ(j["combination"], "Straight Flush");
  EXPECT_EQ(j["cards"].size(), 5u);
  EXPECT_EQ(pkf_best_hand(spec.get(), 5, "HA HK", "", &hand), PKF_INVALID_ARGUMENT);
}

TEST(CApi, SimulateEvaluateAndMutate) {
  auto spec = Preset("badugi");
  char* corpus = nullptr;
  ASSERT_EQ(pkf_simulate(spec.get(), 4, 7, PKF_MODE_NSP, &corpus), PKF_OK) << pkf_last_error();
  const std::string gold = Take(corpus);
  const auto records = Lines(gold);
  ASSERT_FALSE(records.empty());
  EXPECT_EQ(Json::parse(records.front())["mode"], "NSP");

  char* preds = nullptr;
  ASSERT_EQ(pkf_mutate_predictions(gold.c_str(), PKF_MODE_NSP, nullptr, 0, &preds), PKF_OK);
  const std::string perfect = Take(preds);
  char* report = nullptr;
  char* json = nullptr;
  ASSERT_EQ(pkf_evaluate(gold.c_str(), perfect.c_str(), PKF_MODE_NSP, &report, &json), PKF_OK) << pkf_last_error();
  EXPECT_NE(Take(report).find("100.00"), std::string::npos);
  pkf_string_free(json);

  ASSERT_EQ(pkf_mutate_predictions(gold.c_str(), PKF_MODE_NSP, "shuffle", 1, &preds), PKF_OK);
  ASSERT_EQ(pkf_evaluate(gold.c_str(), Take(preds).c_str(), PKF_MODE_NSP, nullptr, &json), PKF_OK);
  const Json rj = Json::parse(Take(json));
  EXPECT_NE(rj.dump().find("\"shuffle\""), std::string::npos);

  EXPECT_EQ(pkf_mutate_predictions(gold.c_str(), PKF_MODE_NSP, "juggle", 1, &preds), PKF_UNKNOWN_SYMBOL);

  char* stats = nullptr;
  ASSERT_EQ(pkf_corpus_stats(gold.c_str(), &stats), PKF_OK);
  EXPECT_EQ(Json::parse(Take(stats))["samples"], records.size());
}

TEST(CApi, BuildCorpusOptions) {
  char* corpus = nullptr;
  ASSERT_EQ(pkf_build_corpus(R"({"presets":["texas","badugi"],"rounds":2,"modes":["nsp","dsp"],"seed":5,"samples":50})",
                             &corpus),
            PKF_OK)
      << pkf_last_error();
  EXPECT_EQ(Lines(Take(corpus)).size(), 50u);
  EXPECT_EQ(pkf_build_corpus(R"({"round":2})", &corpus), PKF_INVALID_ARGUMENT);
  EXPECT_EQ(pkf_build_corpus("{", &corpus), PKF_INVALID_ARGUMENT);
  EXPECT_EQ(pkf_build_corpus(R"({"modes":["xyz"]})", &corpus), PKF_INVALID_ARGUMENT);
}

TEST(CApi, CoreSetAndSegments) {
  char* pairs = nullptr;
  ASSERT_EQ(pkf_core_set(12, 3, &pairs), PKF_OK);
  const auto lines = Lines(Take(pairs));
  ASSERT_EQ(lines.size(), 12u);
  EXPECT_TRUE(Json::parse(lines[0]).contains("instruction"));

  char* seg = nullptr;
  const std::string text = "One. Two! Three?\nFour.";
  ASSERT_EQ(pkf_segment_script(text.c_str(), 1, 2, 0.5, 0.0, 9, &seg), PKF_OK);
  const Json j = Json::parse(Take(seg));
  std::string joined;
  for (const auto& c : j["chunks"]) joined += c.get<std::string>();
  EXPECT_EQ(joined, text);
  EXPECT_EQ(j["chunks"].size(), j["rephrase"].size());
}

TEST(CApi, ServerAnswersHealth) {
  pkf_server* server = nullptr;
  int port = 0;
  ASSERT_EQ(pkf_server_start("127.0.0.1", 0, nullptr, nullptr, &server, &port), PKF_OK) << pkf_last_error();
  ASSERT_GT(port, 0);
  httplib::Client client("127.0.0.1", port);
  auto res = client.Get("/health");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  auto created = client.Post("/sessions", R"({"preset":"texas","seed":4})", "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  pkf_server_stop(server);
  EXPECT_EQ(pkf_server_wait(server), PKF_OK);
  pkf_server_free(server);
}

TEST(CApi, ServerServesTheWebClient) {
  const std::string web = std::string(POKERFORGE_SOURCE_DIR) + "/web";
  pkf_server* server = nullptr;
  int port = 0;
  ASSERT_EQ(pkf_server_start("127.0.0.1", 0, nullptr, web.c_str(), &server, &port), PKF_OK) << pkf_last_error();
  httplib::Client client("127.0.0.1", port);
  auto index = client.Get("/");
  ASSERT_TRUE(index);
  EXPECT_EQ(index->status, 200);
  EXPECT_NE(index->body.find("app.js"), std::string::npos);
  auto script = client.Get("/app.js");
  ASSERT_TRUE(script);
  EXPECT_EQ(script->status, 200);
  // Every endpoint the client calls exists.
  for (const char* path : {"/sessions", "/bots", "/join", "/actions", "/events", "/view", "/presets"}) {
    EXPECT_NE(script->body.find(path), std::string::npos) << path;
  }
  pkf_server_free(server);
}

}  // namespace
