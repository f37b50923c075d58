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

#include "dicelab/enumeration.h"

#include <algorithm>
#include <string>

namespace dicelab {

namespace {

void CheckSides(int sides) {
  if (sides < 1) {
    throw DiceError(ErrorCode::kInvalidSides,
                    "number of sides must be positive, got " +
                        std::to_string(sides));
  }
}

}  // namespace

DieSpace::DieSpace(int sides) : sides_(sides) { CheckSides(sides); }

DieSpace::Iterator::Iterator(int sides)
    : sides_(sides), cursor_(sides, 0), done_(false) {
  FillFrom(0);
}

void DieSpace::Iterator::FillFrom(std::size_t from) {
  const auto n = static_cast<std::size_t>(sides_);
  long long remaining = FaceSum(sides_);
  for (std::size_t k = 0; k < from; ++k) remaining -= cursor_[k];
  int floor = from == 0 ? 1 : cursor_[from - 1];
  for (std::size_t k = from; k < n; ++k) {
    // Slots after this one can absorb at most `sides_` each.
    const long long after = static_cast<long long>(n - k - 1);
    const long long lowest = remaining - after * sides_;
    const int value = static_cast<int>(std::max<long long>(floor, lowest));
    cursor_[k] = value;
    remaining -= value;
    floor = value;
  }
}

DieSpace::Iterator& DieSpace::Iterator::operator++() {
  if (done_) return *this;
  const auto n = static_cast<std::size_t>(sides_);
  // The last slot is pinned by the sum, so start one to its left.
  long long prefix = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) prefix += cursor_[k];
  for (std::size_t p = n >= 2 ? n - 1 : 0; p-- > 0;) {
    prefix -= cursor_[p];
    const int value = cursor_[p] + 1;
    const long long rest = FaceSum(sides_) - prefix - value;
    const long long slots = static_cast<long long>(n - p - 1);
    if (value <= sides_ && slots * value <= rest && rest <= slots * sides_) {
      cursor_[p] = value;
      FillFrom(p + 1);
      return *this;
    }
  }
  done_ = true;
  cursor_.clear();
  return *this;
}

std::vector<Die> MaterializeDice(int sides) {
  std::vector<Die> out;
  for (const Die& d : DieSpace(sides)) out.push_back(d);
  return out;
}

std::uint64_t CountDice(int sides) {
  CheckSides(sides);
  const int n = sides;
  const int total = static_cast<int>(FaceSum(n));
  // ways[lo][rem] for the current number of slots left: non-decreasing
  // fills with every value in lo..n that sum to rem.
  std::vector<std::vector<std::uint64_t>> ways(
      n + 2, std::vector<std::uint64_t>(total + 1, 0));
  for (int lo = 1; lo <= n + 1; ++lo) ways[lo][0] = 1;  // zero slots left
  for (int slots = 1; slots <= n; ++slots) {
    std::vector<std::vector<std::uint64_t>> next(
        n + 2, std::vector<std::uint64_t>(total + 1, 0));
    for (int lo = n; lo >= 1; --lo) {
      for (int rem = 0; rem <= total; ++rem) {
        // Either the next face is exactly lo, or every face is above lo.
        std::uint64_t c = next[lo + 1][rem];
        if (rem >= lo) c += ways[lo][rem - lo];
        next[lo][rem] = c;
      }
    }
    ways = std::move(next);
  }
  return ways[1][total];
}

}  // namespace dicelab
