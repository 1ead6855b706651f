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

#ifndef POKERFORGE_SCRIPT_SCRIPT_H_
#define POKERFORGE_SCRIPT_SCRIPT_H_

#include <string>
#include <string_view>

#include "common/error.h"
#include "script/game_spec.h"

namespace pokerforge {

// Parses the line-oriented game-script format (docs/script_format.md).
// Throws Error with kMissingSection, kUnknownSymbol, kMalformedFlow or
// kMalformedScript; every error carries the offending line number when one
// exists.
GameSpec ParseScript(std::string_view text);

// Inverse of ParseScript for specs that pass ValidateSpec. Output is a pure
// function of the spec.
std::string RenderScript(const GameSpec& spec);

// Reports every broken GameSpec invariant. Codes: PlayerCount, BetLimits,
// Blinds, ValueSpec, SuitSpec, SpecialSpec, AmbiguousCard, ReservedToken,
// StrategyCount, HandSize, HoleUse, CatchAll, RankIndex, GroupShape,
// UnknownSymbol, Qualifier, MalformedFlow, DeckExhausted, HandUnreachable.
Violations ValidateSpec(const GameSpec& spec);

// Throws Error(kInvalidSpec) listing the violations, if any.
void RequireValidSpec(const GameSpec& spec);

std::string RenderPredicate(const std::vector<Atom>& predicates);

}  // namespace pokerforge

#endif  // POKERFORGE_SCRIPT_SCRIPT_H_
