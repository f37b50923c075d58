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

#ifndef DICELAB_DIE_H_
#define DICELAB_DIE_H_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dicelab/error.h"

namespace dicelab {

// An n-sided die: a size-n multiset over {1..n} whose faces sum to
// n(n+1)/2, rolled uniformly over its n slots. Faces are kept sorted
// ascending so that equal multisets compare, hash and order identically.
class Die {
 public:
  // Validates and canonicalizes. Throws DiceError with kInvalidSides,
  // kWrongLength, kFaceOutOfRange or kWrongSum.
  static Die Make(int sides, std::span<const int> faces);

  // Same as Make with the number of sides taken from faces.size().
  static Die FromFaces(std::span<const int> faces);

  // The standard die {1, 2, ..., n}.
  static Die Standard(int sides);

  int sides() const { return static_cast<int>(faces_.size()); }
  std::span<const int> faces() const { return faces_; }
  int face(std::size_t position) const { return faces_[position]; }

  bool IsStandard() const;

  std::string ToString() const;

  friend bool operator==(const Die&, const Die&) = default;
  friend auto operator<=>(const Die&, const Die&) = default;

 private:
  explicit Die(std::vector<int> sorted_faces)
      : faces_(std::move(sorted_faces)) {}

  std::vector<int> faces_;
};

// Required face sum n(n+1)/2.
constexpr long long FaceSum(int sides) {
  return static_cast<long long>(sides) * (sides + 1) / 2;
}

// Face multiplicities: counts[k-1] = number of faces equal to k.
struct GammaProfile {
  int sides = 0;
  std::vector<int> counts;

  // 1-indexed by face value; 0 outside 1..sides.
  int Count(int face) const {
    return face >= 1 && face <= sides ? counts[face - 1] : 0;
  }

  friend bool operator==(const GammaProfile&, const GammaProfile&) = default;
};

// Adjacent multiplicity sums: values[k-1] = gamma_k + gamma_{k+1} for
// k = 1..n-1. Empty for n = 1.
struct XiProfile {
  int sides = 0;
  std::vector<int> values;

  // 1-indexed, k in 1..sides-1.
  int At(int k) const { return values[k - 1]; }

  friend bool operator==(const XiProfile&, const XiProfile&) = default;
};

GammaProfile ComputeGamma(const Die& die);
XiProfile ComputeXi(const GammaProfile& gamma);

// Inverse of ComputeGamma. Throws DiceError if the counts do not describe
// a valid die.
Die DieFromGamma(const GammaProfile& gamma);

// The one-step operator on canonical positions (0-based): the face at
// `decrement_position` goes down by one and the face at
// `increment_position` goes up by one. The result is re-canonicalized.
Die OneStep(const Die& die, std::size_t decrement_position,
            std::size_t increment_position);

// Every distinct die reachable by a single one-step, excluding `die`
// itself, in ascending canonical order.
std::vector<Die> OneStepNeighbors(const Die& die);

}  // namespace dicelab

#endif  // DICELAB_DIE_H_
