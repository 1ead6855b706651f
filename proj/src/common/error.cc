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

#include "common/error.h"

#include <algorithm>

namespace pokerforge {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kMissingSection: return "MissingSection";
    case ErrorCode::kUnknownSymbol: return "UnknownSymbol";
    case ErrorCode::kMalformedFlow: return "MalformedFlow";
    case ErrorCode::kMalformedScript: return "MalformedScript";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kMalformedState: return "MalformedState";
    case ErrorCode::kUnknownKey: return "UnknownKey";
    case ErrorCode::kUnknownPlayer: return "UnknownPlayer";
    case ErrorCode::kIllegalAction: return "IllegalAction";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kBadPath: return "BadPath";
    case ErrorCode::kCoreFnFailure: return "CoreFnFailure";
    case ErrorCode::kMalformedOp: return "MalformedOp";
    case ErrorCode::kUnknownCoreFn: return "UnknownCoreFn";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kIllegalState: return "IllegalState";
    case ErrorCode::kNoLegalHand: return "NoLegalHand";
    case ErrorCode::kStrategyMismatch: return "StrategyMismatch";
    case ErrorCode::kNonTermination: return "NonTermination";
    case ErrorCode::kEmptyCategory: return "EmptyCategory";
    case ErrorCode::kCorpusMismatch: return "CorpusMismatch";
    case ErrorCode::kNotYourTurn: return "NotYourTurn";
    case ErrorCode::kUnknownSession: return "UnknownSession";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

namespace {

std::string Decorate(ErrorCode code, const std::string& message, int line) {
  std::string out(ErrorCodeName(code));
  if (line > 0) out += " (line " + std::to_string(line) + ")";
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string message, int line)
    : std::runtime_error(Decorate(code, message, line)),
      code_(code),
      line_(line) {}

void Fail(ErrorCode code, std::string message, int line) {
  throw Error(code, std::move(message), line);
}

bool HasViolation(const Violations& violations, std::string_view code) {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

}  // namespace pokerforge
