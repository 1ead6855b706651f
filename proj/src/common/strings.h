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

#ifndef POKERFORGE_COMMON_STRINGS_H_
#define POKERFORGE_COMMON_STRINGS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pokerforge {

std::string_view Trim(std::string_view s);
std::vector<std::string> Split(std::string_view s, std::string_view sep);
// Splits on runs of ASCII whitespace, dropping empties.
std::vector<std::string> SplitWords(std::string_view s);
std::string Join(const std::vector<std::string>& parts, std::string_view sep);
bool StartsWith(std::string_view s, std::string_view prefix);
std::string ToLower(std::string_view s);
std::optional<std::int64_t> ParseInt(std::string_view s);
// Splits text into lines; a trailing newline does not produce an empty line.
std::vector<std::string> SplitLines(std::string_view text);

}  // namespace pokerforge

#endif  // POKERFORGE_COMMON_STRINGS_H_
