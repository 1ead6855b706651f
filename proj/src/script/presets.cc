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

#include "script/presets.h"

#include "script/script.h"

namespace pokerforge {
namespace {

struct Alias {
  const char* name;
  const char* file;
};

constexpr Alias kAliases[] = {
    {"texas", "texas"},
    {"omaha", "omaha"},
    {"omaha-hl", "omaha_hl"},
    {"short-deck", "short_deck"},
    {"27-triple-draw", "deuce_to_seven_triple_draw"},
    {"a5-triple-draw", "ace_to_five_triple_draw"},
    {"27-single-draw", "deuce_to_seven_single_draw"},
    {"badugi", "badugi"},
    {"badeucey", "badeucey"},
    {"badacey", "badacey"},
};

}  // namespace

const std::vector<std::string>& PresetNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& a : kAliases) out.emplace_back(a.name);
    return out;
  }();
  return names;
}

std::string_view PresetScript(std::string_view name) {
  for (const auto& a : kAliases) {
    if (name != a.name && name != a.file) continue;
    for (const auto& [stem, text] : PresetFiles()) {
      if (stem == a.file) return text;
    }
  }
  Fail(ErrorCode::kInvalidArgument, "unknown preset '" + std::string(name) + "'");
}

GameSpec LoadPreset(std::string_view name) { return ParseScript(PresetScript(name)); }

}  // namespace pokerforge
