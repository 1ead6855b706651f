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

/* Public C interface of the pokerforge game engine.
 *
 * Conventions:
 *   - Every function returns a pkf_status; PKF_OK is zero.
 *   - On failure pkf_last_error() describes the problem for the calling
 *     thread and pkf_last_error_line() gives a 1-based source line when one
 *     applies.
 *   - Output strings are allocated by the library and released with
 *     pkf_string_free(). Output handles are released with their _free
 *     function. Outputs are written only on success.
 *   - Text formats (game scripts, states, diffs, corpora) are documented in
 *     docs/.
 */
#ifndef POKERFORGE_POKERFORGE_H_
#define POKERFORGE_POKERFORGE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PKF_API __declspec(dllexport)
#else
#define PKF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pkf_status {
  PKF_OK = 0,
  PKF_INVALID_ARGUMENT = 1,
  PKF_MISSING_SECTION,
  PKF_UNKNOWN_SYMBOL,
  PKF_MALFORMED_FLOW,
  PKF_MALFORMED_SCRIPT,
  PKF_INVALID_SPEC,
  PKF_MALFORMED_STATE,
  PKF_UNKNOWN_KEY,
  PKF_UNKNOWN_PLAYER,
  PKF_ILLEGAL_ACTION,
  PKF_SCHEMA_MISMATCH,
  PKF_BAD_PATH,
  PKF_CORE_FN_FAILURE,
  PKF_MALFORMED_OP,
  PKF_UNKNOWN_CORE_FN,
  PKF_ARITY_MISMATCH,
  PKF_ILLEGAL_STATE,
  PKF_NO_LEGAL_HAND,
  PKF_STRATEGY_MISMATCH,
  PKF_NON_TERMINATION,
  PKF_EMPTY_CATEGORY,
  PKF_CORPUS_MISMATCH,
  PKF_NOT_YOUR_TURN,
  PKF_UNKNOWN_SESSION,
  PKF_IO,
  PKF_INTERNAL = 100
} pkf_status;

typedef enum pkf_mode { PKF_MODE_NSP = 0, PKF_MODE_DSP = 1 } pkf_mode;

typedef struct pkf_spec pkf_spec;
typedef struct pkf_state pkf_state;
typedef struct pkf_server pkf_server;

/* ---- library ---------------------------------------------------------- */

PKF_API const char* pkf_version(void);
/* Name of a status code, e.g. "IllegalAction". Never NULL. */
PKF_API const char* pkf_status_name(pkf_status status);
/* Message of the calling thread's last failure, or "". It reads
 * "Code (line N): text", the line part only when one applies. */
PKF_API const char* pkf_last_error(void);
PKF_API int pkf_last_error_line(void);
PKF_API void pkf_string_free(char* s);

/* ---- game scripts ----------------------------------------------------- */

PKF_API pkf_status pkf_spec_parse(const char* script, pkf_spec** out);
/* Accepts a preset alias ("texas") or file stem ("texas"). */
PKF_API pkf_status pkf_spec_preset(const char* name, pkf_spec** out);
PKF_API void pkf_spec_free(pkf_spec* spec);
PKF_API pkf_status pkf_spec_render(const pkf_spec* spec, char** script_out);
/* Violations as "Code: message" lines; empty when valid. */
PKF_API pkf_status pkf_spec_validate(const pkf_spec* spec, char** violations_out);
PKF_API pkf_status pkf_spec_name(const pkf_spec* spec, char** name_out);
/* -1 for a NULL spec. */
PKF_API int pkf_spec_num_players(const pkf_spec* spec);
/* Preset aliases, one per line. */
PKF_API pkf_status pkf_preset_names(char** names_out);
PKF_API pkf_status pkf_preset_script(const char* name, char** script_out);
/* Perturbed copy of a spec that passes validation. */
PKF_API pkf_status pkf_spec_sample_variant(const pkf_spec* base, uint64_t seed, pkf_spec** out);

/* ---- states ----------------------------------------------------------- */

/* State after the start step. */
PKF_API pkf_status pkf_state_init(const pkf_spec* spec, int64_t seed, pkf_state** out);
PKF_API pkf_status pkf_state_parse(const char* text, pkf_state** out);
PKF_API void pkf_state_free(pkf_state* state);
PKF_API pkf_status pkf_state_serialize(const pkf_state* state, char** text_out);
/* Redacted copy for one seat. */
PKF_API pkf_status pkf_state_view(const pkf_state* state, int player, pkf_state** out);
PKF_API pkf_status pkf_state_validate(const pkf_spec* spec, const pkf_state* state, char** violations_out);
/* 1 once the round is over, 0 otherwise, -1 on error. */
PKF_API int pkf_state_is_terminal(const pkf_spec* spec, const pkf_state* state);
/* Seat to act, or -1. */
PKF_API int pkf_state_current_actor(const pkf_state* state);

/* ---- engine ----------------------------------------------------------- */

/* Legal inputs, one per line ("2 call", "2 raise 4"); empty when nobody acts. */
PKF_API pkf_status pkf_legal_actions(const pkf_spec* spec, const pkf_state* state, char** actions_out);
/* One transition. `input` is "none" for automatic steps. diff_out and
 * category_out may be NULL. */
PKF_API pkf_status pkf_step(const pkf_spec* spec, const pkf_state* state, const char* input, pkf_state** next_out,
                            char** diff_out, char** category_out);

/* ---- diffs ------------------------------------------------------------ */

PKF_API pkf_status pkf_diff_compute(const pkf_state* prev, const pkf_state* next, char** diff_out);
PKF_API pkf_status pkf_diff_merge(const pkf_spec* spec, const pkf_state* prev, const char* diff, pkf_state** out);
/* *equivalent_out is 1 or 0; detail_out (may be NULL) receives a JSON
 * object {"reason", "key", "detail"}. */
PKF_API pkf_status pkf_diff_equivalent(const pkf_spec* spec, const char* pred, const char* gold,
                                       const pkf_state* prev, int* equivalent_out, char** detail_out);
/* `args` is "name=value" pairs separated by spaces. */
PKF_API pkf_status pkf_invoke_core(const pkf_spec* spec, const pkf_state* state, const char* fn, const char* args,
                                   pkf_state** out);
PKF_API pkf_status pkf_core_manifest(char** manifest_out);

/* ---- hands ------------------------------------------------------------ */

/* Best hand of a seat's cards under strategy `strategy`. Cards are
 * space-separated tokens. Output is a JSON object {"combination", "cards"}. */
PKF_API pkf_status pkf_best_hand(const pkf_spec* spec, int strategy, const char* hole, const char* community,
                                 char** hand_out);

/* ---- data generation -------------------------------------------------- */

/* NDJSON corpus of `rounds` simulated rounds of one spec. */
PKF_API pkf_status pkf_simulate(const pkf_spec* spec, int rounds, int64_t seed, pkf_mode mode, char** corpus_out);
/* Corpus from a JSON options object:
 *   {"presets": [names], "variants": n, "rounds": r, "modes": ["nsp","dsp"],
 *    "balance": "targets file text", "seed": s, "samples": n} */
PKF_API pkf_status pkf_build_corpus(const char* options_json, char** corpus_out);
/* JSON statistics of an NDJSON corpus. */
PKF_API pkf_status pkf_corpus_stats(const char* corpus, char** stats_out);
/* NDJSON instruction/behavior pairs over the shipped core functions. */
PKF_API pkf_status pkf_core_set(int n, uint64_t seed, char** pairs_out);
/* JSON {"chunks": [...], "rephrase": [...]}. */
PKF_API pkf_status pkf_segment_script(const char* text, int min_sentences, int max_sentences, double rephrase_prob,
                                      double all_marked_prob, uint64_t seed, char** segments_out);

/* ---- evaluation ------------------------------------------------------- */

/* Scores predictions against a gold corpus. Either output may be NULL. */
PKF_API pkf_status pkf_evaluate(const char* gold_corpus, const char* predictions, pkf_mode mode, char** report_out,
                                char** report_json_out);
/* Gold predictions with every `every`-th record of `category` corrupted;
 * category NULL or every <= 0 leaves all predictions intact. */
PKF_API pkf_status pkf_mutate_predictions(const char* gold_corpus, pkf_mode mode, const char* category, int every,
                                          char** predictions_out);

/* ---- play service ----------------------------------------------------- */

/* Starts the HTTP service on a background thread. port 0 picks a free
 * port; the bound port is written to *port_out. data_dir and static_dir
 * may be NULL. Sessions found in data_dir are restored. */
PKF_API pkf_status pkf_server_start(const char* host, int port, const char* data_dir, const char* static_dir,
                                    pkf_server** out, int* port_out);
/* Blocks until the server stops. */
PKF_API pkf_status pkf_server_wait(pkf_server* server);
PKF_API void pkf_server_stop(pkf_server* server);
PKF_API void pkf_server_free(pkf_server* server);

#ifdef __cplusplus
}
#endif

#endif /* POKERFORGE_POKERFORGE_H_ */
