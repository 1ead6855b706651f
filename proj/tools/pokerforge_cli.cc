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

// Command-line front end over the C API.
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pokerforge/pokerforge.h"

namespace {

using Json = nlohmann::ordered_json;

struct CliError {
  pkf_status status;
  std::string message;
};

void Check(pkf_status status) {
  if (status == PKF_OK) return;
  throw CliError{status, pkf_last_error()};
}

// Takes ownership of a library string.
std::string Take(char* s) {
  std::string out = s ? s : "";
  pkf_string_free(s);
  return out;
}

struct SpecDeleter {
  void operator()(pkf_spec* s) const { pkf_spec_free(s); }
};
struct StateDeleter {
  void operator()(pkf_state* s) const { pkf_state_free(s); }
};
using SpecPtr = std::unique_ptr<pkf_spec, SpecDeleter>;
using StatePtr = std::unique_ptr<pkf_state, StateDeleter>;

std::string ReadFile(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{PKF_IO, "Io: cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{PKF_IO, "Io: cannot write " + path};
  out << text;
  if (!out) throw CliError{PKF_IO, "Io: cannot write " + path};
}

pkf_mode ParseMode(const std::string& m) {
  if (m == "nsp" || m == "NSP") return PKF_MODE_NSP;
  if (m == "dsp" || m == "DSP") return PKF_MODE_DSP;
  throw CliError{PKF_INVALID_ARGUMENT, "InvalidArgument: mode must be nsp or dsp"};
}

// A game given as --preset NAME or --script FILE.
struct GameArg {
  std::string preset;
  std::string script;

  void Add(CLI::App* cmd) {
    auto* p = cmd->add_option("--preset", preset, "Preset name");
    auto* s = cmd->add_option("--script", script, "Game script file");
    p->excludes(s);
  }

  SpecPtr Load() const {
    pkf_spec* spec = nullptr;
    if (!script.empty()) {
      Check(pkf_spec_parse(ReadFile(script).c_str(), &spec));
    } else if (!preset.empty()) {
      Check(pkf_spec_preset(preset.c_str(), &spec));
    } else {
      throw CliError{PKF_INVALID_ARGUMENT, "InvalidArgument: give --preset or --script"};
    }
    return SpecPtr(spec);
  }
};

int Serve(const std::string& host, int port, const std::string& data_dir, const std::string& web_dir) {
  // Signals are taken synchronously below; server threads inherit the mask.
  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGINT);
  sigaddset(&set, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &set, nullptr);
  pkf_server* server = nullptr;
  int bound = 0;
  Check(pkf_server_start(host.c_str(), port, data_dir.empty() ? nullptr : data_dir.c_str(),
                         web_dir.empty() ? nullptr : web_dir.c_str(), &server, &bound));
  std::cout << "listening on http://" << host << ":" << bound << std::endl;
  int sig = 0;
  sigwait(&set, &sig);
  pkf_server_free(server);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pokerforge: poker game engine, corpus generator and evaluator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pkf_version()));

  // presets
  auto* presets = app.add_subcommand("presets", "List presets or print one preset script");
  std::string preset_name;
  presets->add_option("name", preset_name, "Preset to print");

  // validate
  auto* validate = app.add_subcommand("validate", "Parse and validate a game script");
  GameArg validate_game;
  validate_game.Add(validate);

  // registry
  auto* registry = app.add_subcommand("registry", "Print the core function manifest");

  // step
  auto* step = app.add_subcommand("step", "Apply one input to a state");
  GameArg step_game;
  step_game.Add(step);
  std::string step_state, step_input = "none", step_out, step_diff;
  std::int64_t step_seed = 0;
  step->add_option("--state", step_state, "State file; omitted starts a round");
  step->add_option("--seed", step_seed, "Round seed when no state is given");
  step->add_option("--input", step_input, "Input such as 'none' or '2 raise 10'");
  step->add_option("--out", step_out, "Next state file (default stdout)");
  step->add_option("--diff", step_diff, "Write the diff script here");

  // legal
  auto* legal = app.add_subcommand("legal", "List legal inputs for a state");
  GameArg legal_game;
  legal_game.Add(legal);
  std::string legal_state;
  legal->add_option("--state", legal_state, "State file")->required();

  // hand
  auto* hand = app.add_subcommand("hand", "Best hand of some cards");
  GameArg hand_game;
  hand_game.Add(hand);
  int hand_strategy = 0;
  std::string hand_hole, hand_community;
  hand->add_option("--strategy", hand_strategy, "Ranking strategy index");
  hand->add_option("--hole", hand_hole, "Hole cards, space separated")->required();
  hand->add_option("--community", hand_community, "Community cards, space separated");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Simulate rounds of one game with random players");
  GameArg sim_game;
  sim_game.Add(simulate);
  int sim_rounds = 1;
  std::int64_t sim_seed = 0;
  std::string sim_mode = "dsp", sim_out;
  simulate->add_option("--rounds", sim_rounds, "Rounds to play")->check(CLI::NonNegativeNumber);
  simulate->add_option("--seed", sim_seed, "Seed");
  simulate->add_option("--mode", sim_mode, "nsp or dsp");
  simulate->add_option("--out", sim_out, "Corpus file (default stdout)");

  // datagen
  auto* datagen = app.add_subcommand("datagen", "Build a training corpus");
  std::vector<std::string> dg_presets, dg_modes{"dsp"};
  int dg_variants = 0, dg_rounds = 20;
  std::int64_t dg_seed = 0;
  std::size_t dg_samples = 0;
  std::string dg_balance, dg_out, dg_stats;
  datagen->add_option("--preset", dg_presets, "Preset to include (repeatable; default all)");
  datagen->add_option("--variants", dg_variants, "Sample this many game variants instead")
      ->check(CLI::NonNegativeNumber);
  datagen->add_option("--rounds", dg_rounds, "Rounds per game")->check(CLI::NonNegativeNumber);
  datagen->add_option("--mode", dg_modes, "nsp and/or dsp (repeatable)");
  datagen->add_option("--balance", dg_balance, "Balance targets file");
  datagen->add_option("--seed", dg_seed, "Seed");
  datagen->add_option("--samples", dg_samples, "Exact number of samples (0 keeps all)");
  datagen->add_option("--out", dg_out, "Corpus file (default stdout)");
  datagen->add_option("--stats", dg_stats, "Write corpus statistics JSON here");

  // stats
  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  std::string stats_corpus;
  stats->add_option("corpus", stats_corpus, "Corpus file")->required();

  // coreset
  auto* coreset = app.add_subcommand("coreset", "Instruction/behavior pairs for the core functions");
  int cs_n = 100;
  std::uint64_t cs_seed = 0;
  std::string cs_out;
  coreset->add_option("--n", cs_n, "Pairs")->check(CLI::NonNegativeNumber);
  coreset->add_option("--seed", cs_seed, "Seed");
  coreset->add_option("--out", cs_out, "Output file (default stdout)");

  // segment
  auto* segment = app.add_subcommand("segment", "Split a script into chunks marked for rephrasing");
  std::string seg_file;
  int seg_min = 1, seg_max = 3;
  double seg_rephrase = 0.3, seg_all = 0.01;
  std::uint64_t seg_seed = 0;
  segment->add_option("file", seg_file, "Script file")->required();
  segment->add_option("--min", seg_min, "Min sentences per chunk");
  segment->add_option("--max", seg_max, "Max sentences per chunk");
  segment->add_option("--rephrase", seg_rephrase, "Chunk marking probability");
  segment->add_option("--all-marked", seg_all, "Probability that every chunk is marked");
  segment->add_option("--seed", seg_seed, "Seed");

  // eval
  auto* eval = app.add_subcommand("eval", "Score predictions against a gold corpus");
  std::string ev_gold, ev_pred, ev_mode = "dsp", ev_report, ev_json;
  eval->add_option("--gold", ev_gold, "Gold corpus")->required();
  eval->add_option("--pred", ev_pred, "Predictions file")->required();
  eval->add_option("--mode", ev_mode, "nsp or dsp");
  eval->add_option("--report", ev_report, "Report file (default stdout)");
  eval->add_option("--json", ev_json, "Write the JSON report here");

  // mutate
  auto* mutate = app.add_subcommand("mutate", "Gold predictions, optionally corrupted");
  std::string mu_gold, mu_mode = "dsp", mu_category, mu_out;
  int mu_every = 0;
  mutate->add_option("--gold", mu_gold, "Gold corpus")->required();
  mutate->add_option("--mode", mu_mode, "nsp or dsp");
  mutate->add_option("--category", mu_category, "Step category to corrupt");
  mutate->add_option("--every", mu_every, "Corrupt every k-th record of the category");
  mutate->add_option("--out", mu_out, "Predictions file (default stdout)");

  // serve
  auto* serve = app.add_subcommand("serve", "Run the HTTP play service");
  std::string sv_host = "127.0.0.1", sv_data, sv_web;
  int sv_port = 8080;
  serve->add_option("--host", sv_host, "Bind address");
  serve->add_option("--port", sv_port, "Port (0 picks one)");
  serve->add_option("--data-dir", sv_data, "Session event log directory");
  serve->add_option("--web-dir", sv_web, "Static files served at /");

  CLI11_PARSE(app, argc, argv);

  try {
    if (presets->parsed()) {
      char* out = nullptr;
      if (preset_name.empty()) {
        Check(pkf_preset_names(&out));
      } else {
        Check(pkf_preset_script(preset_name.c_str(), &out));
      }
      WriteOut("", Take(out));
    } else if (validate->parsed()) {
      auto spec = validate_game.Load();
      char* out = nullptr;
      Check(pkf_spec_validate(spec.get(), &out));
      const std::string violations = Take(out);
      if (!violations.empty()) {
        std::cerr << violations;
        return 1;
      }
      char* name = nullptr;
      Check(pkf_spec_name(spec.get(), &name));
      std::cout << "ok: " << Take(name) << "\n";
    } else if (registry->parsed()) {
      char* out = nullptr;
      Check(pkf_core_manifest(&out));
      WriteOut("", Take(out));
    } else if (step->parsed()) {
      auto spec = step_game.Load();
      pkf_state* raw = nullptr;
      if (step_state.empty()) {
        Check(pkf_state_init(spec.get(), step_seed, &raw));
        StatePtr state(raw);
        char* text = nullptr;
        Check(pkf_state_serialize(state.get(), &text));
        WriteOut(step_out, Take(text));
      } else {
        Check(pkf_state_parse(ReadFile(step_state).c_str(), &raw));
        StatePtr state(raw);
        pkf_state* next = nullptr;
        char* diff = nullptr;
        Check(pkf_step(spec.get(), state.get(), step_input.c_str(), &next, &diff, nullptr));
        StatePtr next_ptr(next);
        const std::string diff_text = Take(diff);
        if (!step_diff.empty()) WriteOut(step_diff, diff_text);
        char* text = nullptr;
        Check(pkf_state_serialize(next_ptr.get(), &text));
        WriteOut(step_out, Take(text));
      }
    } else if (legal->parsed()) {
      auto spec = legal_game.Load();
      pkf_state* raw = nullptr;
      Check(pkf_state_parse(ReadFile(legal_state).c_str(), &raw));
      StatePtr state(raw);
      char* out = nullptr;
      Check(pkf_legal_actions(spec.get(), state.get(), &out));
      WriteOut("", Take(out));
    } else if (hand->parsed()) {
      auto spec = hand_game.Load();
      char* out = nullptr;
      Check(pkf_best_hand(spec.get(), hand_strategy, hand_hole.c_str(), hand_community.c_str(), &out));
      WriteOut("", Take(out) + "\n");
    } else if (simulate->parsed()) {
      auto spec = sim_game.Load();
      char* out = nullptr;
      Check(pkf_simulate(spec.get(), sim_rounds, sim_seed, ParseMode(sim_mode), &out));
      WriteOut(sim_out, Take(out));
    } else if (datagen->parsed()) {
      Json options;
      if (!dg_presets.empty()) options["presets"] = dg_presets;
      options["variants"] = dg_variants;
      options["rounds"] = dg_rounds;
      options["modes"] = dg_modes;
      if (!dg_balance.empty()) options["balance"] = ReadFile(dg_balance);
      options["seed"] = dg_seed;
      options["samples"] = dg_samples;
      char* out = nullptr;
      Check(pkf_build_corpus(options.dump().c_str(), &out));
      const std::string corpus = Take(out);
      WriteOut(dg_out, corpus);
      if (!dg_stats.empty()) {
        char* s = nullptr;
        Check(pkf_corpus_stats(corpus.c_str(), &s));
        WriteOut(dg_stats, Take(s) + "\n");
      }
    } else if (stats->parsed()) {
      char* out = nullptr;
      Check(pkf_corpus_stats(ReadFile(stats_corpus).c_str(), &out));
      WriteOut("", Take(out) + "\n");
    } else if (coreset->parsed()) {
      char* out = nullptr;
      Check(pkf_core_set(cs_n, cs_seed, &out));
      WriteOut(cs_out, Take(out));
    } else if (segment->parsed()) {
      char* out = nullptr;
      Check(pkf_segment_script(ReadFile(seg_file).c_str(), seg_min, seg_max, seg_rephrase, seg_all, seg_seed, &out));
      WriteOut("", Take(out) + "\n");
    } else if (eval->parsed()) {
      char* report = nullptr;
      char* json = nullptr;
      Check(pkf_evaluate(ReadFile(ev_gold).c_str(), ReadFile(ev_pred).c_str(), ParseMode(ev_mode), &report,
                         ev_json.empty() ? nullptr : &json));
      WriteOut(ev_report, Take(report));
      if (!ev_json.empty()) WriteOut(ev_json, Take(json) + "\n");
    } else if (mutate->parsed()) {
      char* out = nullptr;
      Check(pkf_mutate_predictions(ReadFile(mu_gold).c_str(), ParseMode(mu_mode),
                                   mu_category.empty() ? nullptr : mu_category.c_str(), mu_every, &out));
      WriteOut(mu_out, Take(out));
    } else if (serve->parsed()) {
      return Serve(sv_host, sv_port, sv_data, sv_web);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 1;
  }
  return 0;
}
