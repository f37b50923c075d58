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

#ifndef DICELAB_COUNTER_H_
#define DICELAB_COUNTER_H_

#include <optional>
#include <vector>

#include "dicelab/die.h"
#include "dicelab/payoff.h"

namespace dicelab {

// Indices into the xi profile (1-based, both in 1..n-1). The counter die
// built from a pair is the standard die with face `i` raised to i+1 and
// face `j+1` lowered to j.
struct CounterPair {
  int i = 0;
  int j = 0;

  friend bool operator==(const CounterPair&, const CounterPair&) = default;
};

// A die one step from the standard die, together with the pair that
// builds it and its exact payoff against `target`.
struct CounterCertificate {
  Die target;
  CounterPair pair;
  Die counter;
  int gain = 0;  // xi_i - xi_j of the target
  Rational payoff;
};

// True iff (i, j) can be used to build a counter: both in 1..n-1, i != j
// and i != j + 1.
bool IsAdmissiblePair(int sides, CounterPair pair);

// Given a strict pair xi_i > xi_j with i == j + 1, moves one index to a
// neighbouring position so that the pair becomes admissible while keeping
// the strict inequality. Returns nullopt if `adjacent` is not such a pair
// or the neighbouring index does not exist (n < 4).
std::optional<CounterPair> RelabelAdjacentPair(const XiProfile& xi,
                                               CounterPair adjacent);

// Chooses the admissible pair with xi_i > xi_j maximizing xi_i - xi_j,
// ties broken by smallest i then smallest j. Falls back to relabeling when
// every strict pair is adjacent.
// Throws kTooFewSides (n < 4), kStandardDie, or kInternalExhaustion.
CounterPair FindCounterPair(const Die& target);

// The standard die with face i raised and face j+1 lowered.
Die CounterFromPair(int sides, CounterPair pair);

// Recovers the pair that builds `die` from the standard die, if `die` is a
// one-step neighbour of it.
std::optional<CounterPair> PairFromCounter(const Die& die);

// Builds the certificate for FindCounterPair's choice and checks the exact
// payoff; throws kBeatVerificationFailed if it is not above 1/2.
CounterCertificate ConstructCounter(const Die& target);

// One ranked entry: a one-step neighbour of the standard die and how it
// fares against the target.
struct RankedDie {
  Die die;
  CounterPair pair;
  int gain = 0;
  Rational payoff;
};

// Every one-step neighbour of the standard die, ranked by exact payoff
// against `target` (descending, then ascending die order). Winning dice
// form the head, tying dice the middle and losing dice the tail.
// Throws kTooFewSides.
std::vector<RankedDie> RankOneStepDice(const Die& target, int workers = 1);

// The winning head of RankOneStepDice as certificates. Empty for the
// standard die. Throws kTooFewSides.
std::vector<CounterCertificate> AllOneStepCounters(const Die& target,
                                                   int workers = 1);

bool XiAllEqual(const Die& die);

}  // namespace dicelab

#endif  // DICELAB_COUNTER_H_
