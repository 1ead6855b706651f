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

#ifndef POKERFORGE_DIFF_CORE_REGISTRY_H_
#define POKERFORGE_DIFF_CORE_REGISTRY_H_

#include <functional>
#include <string>
#include <vector>

#include "script/game_spec.h"
#include "state/game_state.h"

namespace pokerforge {

// One "name=value" argument of a call op, kept as written.
struct CallArg {
  std::string name;
  std::string value;

  bool operator==(const CallArg&) const = default;
};

using CallArgs = std::vector<CallArg>;

enum class ParamKind {
  kInt,      // decimal integer
  kCards,    // comma-separated card tokens, possibly empty
  kPlayers,  // "all" or comma-separated seat ids
};

struct CoreParam {
  std::string name;
  ParamKind kind = ParamKind::kInt;
};

struct CoreFunction {
  std::string name;
  std::vector<CoreParam> params;
  std::string doc;
  std::function<void(const GameSpec&, GameState&, const CallArgs&)> apply;
};

// Registry in manifest order.
const std::vector<CoreFunction>& CoreRegistry();
const CoreFunction* FindCoreFunction(std::string_view name);

// "name(param: kind, ...)  doc" per line.
std::string CoreManifest();
std::string CoreSignature(const CoreFunction& fn);

// Throws Error(kUnknownCoreFn), Error(kArityMismatch) for a missing,
// repeated, unknown or ill-typed argument, or Error(kIllegalState).
GameState InvokeCore(const GameSpec& spec, std::string_view name, const CallArgs& args,
                     const GameState& state);

// Argument value helpers shared with the engine.
std::string RenderCardArg(const Cards& cards);
std::string RenderPlayersArg(const std::vector<int>& players);

}  // namespace pokerforge

#endif  // POKERFORGE_DIFF_CORE_REGISTRY_H_
