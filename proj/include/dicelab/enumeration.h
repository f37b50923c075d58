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

#ifndef DICELAB_ENUMERATION_H_
#define DICELAB_ENUMERATION_H_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

#include "dicelab/die.h"

namespace dicelab {

// Lazy range over every n-sided die, in strictly increasing lexicographic
// order of canonical face sequences. Non-decreasing sequences are built
// directly; a prefix is extended only while the remaining slots can still
// reach the required sum, so no infeasible branch is ever visited.
//
//   for (const Die& d : DieSpace(6)) { ... }
class DieSpace {
 public:
  class Iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Die;
    using difference_type = std::ptrdiff_t;
    using pointer = const Die*;
    using reference = Die;

    Iterator() = default;  // end sentinel

    Die operator*() const { return Die::Make(sides_, cursor_); }
    Iterator& operator++();
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }

    bool operator==(const Iterator& other) const {
      if (done_ || other.done_) return done_ == other.done_;
      return cursor_ == other.cursor_;
    }

   private:
    friend class DieSpace;
    explicit Iterator(int sides);

    // Writes the lexicographically smallest feasible completion of
    // cursor_[from..] given cursor_[0..from).
    void FillFrom(std::size_t from);

    int sides_ = 0;
    std::vector<int> cursor_;
    bool done_ = true;
  };

  // Throws DiceError(kInvalidSides) for sides < 1.
  explicit DieSpace(int sides);

  Iterator begin() const { return Iterator(sides_); }
  Iterator end() const { return Iterator(); }

  int sides() const { return sides_; }

 private:
  int sides_;
};

inline DieSpace EnumerateDice(int sides) { return DieSpace(sides); }

// Materializes the full die space in enumeration order.
std::vector<Die> MaterializeDice(int sides);

// |D_n| by dynamic programming over (slots filled, smallest allowed face,
// remaining sum); never constructs a die.
std::uint64_t CountDice(int sides);

}  // namespace dicelab

#endif  // DICELAB_ENUMERATION_H_
