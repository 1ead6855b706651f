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

#ifndef POKERFORGE_STATE_RECORD_H_
#define POKERFORGE_STATE_RECORD_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "state/game_state.h"

namespace pokerforge {

// Untyped view of a GameState used by the diff language: every key maps to
// a tree of null / integer / atom / list nodes.
struct Value {
  enum class Kind { kNull, kInt, kAtom, kList };

  Kind kind = Kind::kNull;
  std::int64_t number = 0;
  std::string atom;
  std::vector<Value> items;

  bool operator==(const Value&) const = default;

  static Value Null() { return Value{}; }
  static Value Int(std::int64_t v) { return Value{Kind::kInt, v, {}, {}}; }
  static Value Atom(std::string s) { return Value{Kind::kAtom, 0, std::move(s), {}}; }
  static Value List(std::vector<Value> items = {}) {
    return Value{Kind::kList, 0, {}, std::move(items)};
  }
};

enum class AtomType { kCard, kStep, kPot, kShowdown, kMessage };

// Static description of one node shape in the schema.
struct Type {
  enum class Kind { kInt, kOptInt, kAtom, kList };

  Kind kind = Kind::kInt;
  AtomType atom = AtomType::kCard;
  const Type* elem = nullptr;
  std::string_view sep;
};

struct KeySchema {
  std::string_view name;
  const Type* type;
};

// Keys in canonical order.
const std::vector<KeySchema>& StateSchema();
std::optional<int> KeyIndex(std::string_view name);

using Record = std::vector<Value>;

Record ToRecord(const GameState& state);
// Throws Error(kSchemaMismatch) when a node does not fit the schema.
GameState FromRecord(const Record& record);

std::string RenderValue(const Type& type, const Value& value);
// Throws Error(kInvalidArgument) with a description; callers re-tag it.
Value ParseValue(const Type& type, std::string_view text);

// Slash-separated address: key name followed by list indices.
struct Path {
  int key = 0;
  std::vector<int> index;

  bool operator==(const Path&) const = default;
};

std::string RenderPath(const Path& path);
// Throws Error(kInvalidArgument).
Path ParsePath(std::string_view text);
// Shape of the node a path addresses, or nullptr when the path descends
// below a leaf.
const Type* TypeAt(const Path& path);
// Node at the path, or nullptr when an index is out of range.
Value* Resolve(Record& record, const Path& path);
const Value* Resolve(const Record& record, const Path& path);

// Typed atom codecs shared with the state text format.
std::optional<Pot> ParsePot(std::string_view text);
std::optional<Message> ParseMessage(std::string_view text);
std::optional<ShowdownEntry> ParseShowdownEntry(std::string_view text);

}  // namespace pokerforge

#endif  // POKERFORGE_STATE_RECORD_H_
