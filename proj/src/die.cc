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

#include "dicelab/die.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dicelab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidSides: return "InvalidSides";
    case ErrorCode::kWrongLength: return "WrongLength";
    case ErrorCode::kFaceOutOfRange: return "FaceOutOfRange";
    case ErrorCode::kWrongSum: return "WrongSum";
    case ErrorCode::kPositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::kSamePosition: return "SamePosition";
    case ErrorCode::kDecrementFloor: return "DecrementFloor";
    case ErrorCode::kIncrementCeiling: return "IncrementCeiling";
    case ErrorCode::kMismatchedSides: return "MismatchedSides";
    case ErrorCode::kStandardDie: return "StandardDie";
    case ErrorCode::kTooFewSides: return "TooFewSides";
    case ErrorCode::kInternalExhaustion: return "InternalExhaustion";
    case ErrorCode::kBeatVerificationFailed: return "BeatVerificationFailed";
    case ErrorCode::kInvalidCycleLength: return "InvalidCycleLength";
    case ErrorCode::kMalformedLiteral: return "MalformedLiteral";
  }
  return "Unknown";
}

Die Die::Make(int sides, std::span<const int> faces) {
  if (sides < 1) {
    throw DiceError(ErrorCode::kInvalidSides,
                    "number of sides must be positive, got " +
                        std::to_string(sides));
  }
  if (faces.size() != static_cast<std::size_t>(sides)) {
    throw DiceError(ErrorCode::kWrongLength,
                    "expected " + std::to_string(sides) + " faces, got " +
                        std::to_string(faces.size()));
  }
  long long sum = 0;
  for (int f : faces) {
    if (f < 1 || f > sides) {
      throw DiceError(ErrorCode::kFaceOutOfRange,
                      "face " + std::to_string(f) + " outside 1.." +
                          std::to_string(sides));
    }
    sum += f;
  }
  if (sum != FaceSum(sides)) {
    throw DiceError(ErrorCode::kWrongSum,
                    "faces sum to " + std::to_string(sum) + ", expected " +
                        std::to_string(FaceSum(sides)));
  }
  std::vector<int> sorted(faces.begin(), faces.end());
  std::ranges::sort(sorted);
  return Die(std::move(sorted));
}

Die Die::FromFaces(std::span<const int> faces) {
  return Make(static_cast<int>(faces.size()), faces);
}

Die Die::Standard(int sides) {
  if (sides < 1) {
    throw DiceError(ErrorCode::kInvalidSides,
                    "number of sides must be positive, got " +
                        std::to_string(sides));
  }
  std::vector<int> faces(sides);
  std::iota(faces.begin(), faces.end(), 1);
  return Die(std::move(faces));
}

bool Die::IsStandard() const {
  for (std::size_t k = 0; k < faces_.size(); ++k) {
    if (faces_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

std::string Die::ToString() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < faces_.size(); ++k) {
    if (k) os << ',';
    os << faces_[k];
  }
  os << ']';
  return os.str();
}

GammaProfile ComputeGamma(const Die& die) {
  GammaProfile gamma{die.sides(), std::vector<int>(die.sides(), 0)};
  for (int f : die.faces()) ++gamma.counts[f - 1];
  return gamma;
}

XiProfile ComputeXi(const GammaProfile& gamma) {
  XiProfile xi{gamma.sides, {}};
  if (gamma.sides < 2) return xi;
  xi.values.reserve(gamma.sides - 1);
  for (int k = 1; k < gamma.sides; ++k) {
    xi.values.push_back(gamma.Count(k) + gamma.Count(k + 1));
  }
  return xi;
}

Die DieFromGamma(const GammaProfile& gamma) {
  if (gamma.counts.size() != static_cast<std::size_t>(gamma.sides)) {
    throw DiceError(ErrorCode::kWrongLength,
                    "gamma profile has " + std::to_string(gamma.counts.size()) +
                        " counts for " + std::to_string(gamma.sides) +
                        " sides");
  }
  std::vector<int> faces;
  for (int k = 1; k <= gamma.sides; ++k) {
    int c = gamma.Count(k);
    if (c < 0 || faces.size() + c > static_cast<std::size_t>(gamma.sides)) {
      throw DiceError(ErrorCode::kWrongLength,
                      "gamma counts do not total the number of sides");
    }
    faces.insert(faces.end(), c, k);
  }
  return Die::Make(gamma.sides, faces);
}

Die OneStep(const Die& die, std::size_t decrement_position,
            std::size_t increment_position) {
  const auto n = static_cast<std::size_t>(die.sides());
  if (decrement_position >= n || increment_position >= n) {
    throw DiceError(ErrorCode::kPositionOutOfRange,
                    "one-step position outside 0.." + std::to_string(n - 1));
  }
  if (decrement_position == increment_position) {
    throw DiceError(ErrorCode::kSamePosition,
                    "one-step needs two distinct positions");
  }
  if (die.face(decrement_position) == 1) {
    throw DiceError(ErrorCode::kDecrementFloor,
                    "cannot decrement a face showing 1");
  }
  if (die.face(increment_position) == die.sides()) {
    throw DiceError(ErrorCode::kIncrementCeiling,
                    "cannot increment a face showing " +
                        std::to_string(die.sides()));
  }
  std::vector<int> faces(die.faces().begin(), die.faces().end());
  --faces[decrement_position];
  ++faces[increment_position];
  return Die::Make(die.sides(), faces);
}

std::vector<Die> OneStepNeighbors(const Die& die) {
  // Positions holding the same value give the same result, so it is enough
  // to try one representative position per (decremented, incremented)
  // value pair.
  const int n = die.sides();
  const GammaProfile gamma = ComputeGamma(die);
  auto first_position = [&](int value) {
    auto it = std::ranges::lower_bound(die.faces(), value);
    return static_cast<std::size_t>(it - die.faces().begin());
  };

  std::vector<Die> out;
  for (int down = 2; down <= n; ++down) {
    if (gamma.Count(down) == 0) continue;
    for (int up = 1; up < n; ++up) {
      int needed = down == up ? 2 : 1;
      if (gamma.Count(up) < needed) continue;
      std::size_t down_pos = first_position(down);
      std::size_t up_pos = first_position(up) + (down == up ? 1 : 0);
      Die next = OneStep(die, down_pos, up_pos);
      if (next != die) out.push_back(std::move(next));
    }
  }
  std::ranges::sort(out);
  auto dup = std::ranges::unique(out);
  out.erase(dup.begin(), dup.end());
  return out;
}

}  // namespace dicelab
