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

#ifndef DICELAB_PAYOFF_H_
#define DICELAB_PAYOFF_H_

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "dicelab/die.h"

namespace dicelab {

// Exact fraction in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

// "p/q", always with an explicit denominator.
std::string FormatRational(const Rational& r);

// Outcome counts over all n^2 ordered face pairs (a_i, b_j).
struct PairTally {
  std::int64_t wins = 0;    // a_i > b_j
  std::int64_t ties = 0;    // a_i == b_j
  std::int64_t losses = 0;  // a_i < b_j

  // Payoff numerator over the common denominator 2n^2.
  std::int64_t Score() const { return 2 * wins + ties; }

  friend bool operator==(const PairTally&, const PairTally&) = default;
};

enum class Outcome { kAWins, kBWins, kTie };

const char* OutcomeName(Outcome outcome);

// Linear merge over the sorted face arrays. Throws kMismatchedSides.
PairTally Tally(const Die& a, const Die& b);

// Nested loop over every face pair; the reference for Tally.
PairTally TallyReference(const Die& a, const Die& b);

// Pr(A > B) + Pr(A = B) / 2 = (2 wins + ties) / (2 n^2).
Rational Payoff(const Die& a, const Die& b);

// kAWins iff more ordered pairs favour `a` than favour `b`.
Outcome Beats(const Die& a, const Die& b);

}  // namespace dicelab

#endif  // DICELAB_PAYOFF_H_
