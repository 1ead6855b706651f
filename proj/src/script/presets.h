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

#ifndef POKERFORGE_SCRIPT_PRESETS_H_
#define POKERFORGE_SCRIPT_PRESETS_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "script/game_spec.h"

namespace pokerforge {

// Raw preset files keyed by file stem; generated at build time.
const std::vector<std::pair<std::string_view, std::string_view>>& PresetFiles();

// CLI names of the ten base games in canonical order: texas, omaha,
// omaha-hl, short-deck, 27-triple-draw, a5-triple-draw, 27-single-draw,
// badugi, badeucey, badacey.
const std::vector<std::string>& PresetNames();

// Throws Error(kInvalidArgument) for an unknown name.
std::string_view PresetScript(std::string_view name);
GameSpec LoadPreset(std::string_view name);

}  // namespace pokerforge

#endif  // POKERFORGE_SCRIPT_PRESETS_H_
