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

#ifndef POKERFORGE_DIFF_DIFF_H_
#define POKERFORGE_DIFF_DIFF_H_

#include <string>
#include <string_view>
#include <vector>

#include "diff/core_registry.h"
#include "state/record.h"

namespace pokerforge {

enum class OpKind { kSet, kRemove, kAppend, kMove, kCall };

// One edit. Fields used per kind:
//   set path value      replace the node at path
//   remove path         delete a list element
//   append path value   concatenate a list onto the list at path
//   move path count dst move the first `count` elements of one list to the
//                       end of another
//   call fn args        run a core function
struct EditOp {
  OpKind kind = OpKind::kSet;
  Path path;
  Value value;
  int count = 0;
  Path dst;
  std::string fn;
  CallArgs args;

  bool operator==(const EditOp&) const = default;

  static EditOp Set(Path p, Value v);
  static EditOp Remove(Path p);
  static EditOp Append(Path p, Value v);
  static EditOp Move(Path src, int count, Path dst);
  static EditOp Call(std::string fn, CallArgs args = {});
};

struct DiffScript {
  std::vector<EditOp> ops;

  bool operator==(const DiffScript&) const = default;
};

inline constexpr std::string_view kDiffHeader = "#diff v1";

std::string RenderOp(const EditOp& op);
// Header line, then one op per line.
std::string RenderDiff(const DiffScript& diff);
// The header is optional; blank lines are skipped. Throws
// Error(kMalformedOp, line) or Error(kUnknownCoreFn, line).
DiffScript ParseDiff(std::string_view text);

// Per-key minimal edits taking prev to next. Throws Error(kSchemaMismatch)
// when the two states seat a different number of players.
DiffScript ComputeDiff(const GameState& prev, const GameState& next);

// Applies the ops in order. Throws Error(kBadPath) naming the op index, or
// Error(kCoreFnFailure) naming the function.
GameState Merge(const GameSpec& spec, const GameState& prev, const DiffScript& diff);

struct Equivalence {
  bool equivalent = false;
  // "", "parse_error", "merge_error" or "state_mismatch".
  std::string reason;
  // First differing key for state_mismatch.
  std::string key;
  std::string detail;
};

// Exact text match short-circuits; otherwise both scripts run on prev and
// the results are compared key by key. The gold text must parse.
Equivalence Equivalent(const GameSpec& spec, std::string_view pred, std::string_view gold,
                       const GameState& prev);
// First key on which two states differ, or "" when equal.
std::string FirstDifferingKey(const GameState& a, const GameState& b);

}  // namespace pokerforge

#endif  // POKERFORGE_DIFF_DIFF_H_
