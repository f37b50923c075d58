// Copyright 2026 The Dicelab Authors
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

#ifndef DICELAB_ERROR_H_
#define DICELAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dicelab {

enum class ErrorCode {
  // Die construction.
  kInvalidSides,
  kWrongLength,
  kFaceOutOfRange,
  kWrongSum,
  // One-step operator.
  kPositionOutOfRange,
  kSamePosition,
  kDecrementFloor,
  kIncrementCeiling,
  // Payoff.
  kMismatchedSides,
  // Counter construction.
  kStandardDie,
  kTooFewSides,
  kInternalExhaustion,
  kBeatVerificationFailed,
  // Analysis.
  kInvalidCycleLength,
  // Serialization.
  kMalformedLiteral,
};

// Stable name used in CLI error messages, e.g. "WrongSum".
std::string_view ErrorCodeName(ErrorCode code);

class DiceError : public std::runtime_error {
 public:
  DiceError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dicelab

#endif  // DICELAB_ERROR_H_
