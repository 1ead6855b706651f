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

#ifndef POKERFORGE_COMMON_ERROR_H_
#define POKERFORGE_COMMON_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pokerforge {

// Every failure the library reports carries one of these codes. The C API
// maps them 1:1 onto pkf_status values.
enum class ErrorCode {
  kInvalidArgument = 1,
  kMissingSection,
  kUnknownSymbol,
  kMalformedFlow,
  kMalformedScript,
  kInvalidSpec,
  kMalformedState,
  kUnknownKey,
  kUnknownPlayer,
  kIllegalAction,
  kSchemaMismatch,
  kBadPath,
  kCoreFnFailure,
  kMalformedOp,
  kUnknownCoreFn,
  kArityMismatch,
  kIllegalState,
  kNoLegalHand,
  kStrategyMismatch,
  kNonTermination,
  kEmptyCategory,
  kCorpusMismatch,
  kNotYourTurn,
  kUnknownSession,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, int line = 0);

  ErrorCode code() const { return code_; }
  // 1-based source line for parse errors, 0 when not applicable.
  int line() const { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

[[noreturn]] void Fail(ErrorCode code, std::string message, int line = 0);

// A single broken invariant reported by one of the validate_* functions.
struct Violation {
  std::string code;
  std::string message;

  bool operator==(const Violation&) const = default;
};

using Violations = std::vector<Violation>;

bool HasViolation(const Violations& violations, std::string_view code);

}  // namespace pokerforge

#endif  // POKERFORGE_COMMON_ERROR_H_
