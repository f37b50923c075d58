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

#include "dicelab/counter.h"

#include <algorithm>
#include <string>

#include "dicelab/parallel.h"

namespace dicelab {

namespace {

constexpr int kMinCounterSides = 4;

void CheckCounterSides(const Die& target) {
  if (target.sides() < kMinCounterSides) {
    throw DiceError(ErrorCode::kTooFewSides,
                    "counter construction needs at least 4 sides, got " +
                        std::to_string(target.sides()));
  }
}

std::string PairString(CounterPair p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

}  // namespace

bool IsAdmissiblePair(int sides, CounterPair pair) {
  auto in_range = [&](int k) { return k >= 1 && k <= sides - 1; };
  return in_range(pair.i) && in_range(pair.j) && pair.i != pair.j &&
         pair.i != pair.j + 1;
}

std::optional<CounterPair> RelabelAdjacentPair(const XiProfile& xi,
                                               CounterPair adjacent) {
  const int last = static_cast<int>(xi.values.size());
  const int i = adjacent.i;
  const int j = adjacent.j;
  if (j < 1 || i != j + 1 || i > last || xi.At(i) <= xi.At(j)) {
    return std::nullopt;
  }
  CounterPair out;
  if (j != 1) {
    if (xi.At(j - 1) <= xi.At(j)) {
      out = {i, j - 1};
    } else {
      out = {j - 1, j};
    }
  } else {
    if (i + 1 > last) return std::nullopt;
    if (xi.At(i + 1) >= xi.At(i)) {
      out = {i + 1, j};
    } else {
      out = {i, i + 1};
    }
  }
  return out;
}

CounterPair FindCounterPair(const Die& target) {
  CheckCounterSides(target);
  if (target.IsStandard()) {
    throw DiceError(ErrorCode::kStandardDie,
                    "the standard die ties every die; no counter exists");
  }
  const int n = target.sides();
  const XiProfile xi = ComputeXi(ComputeGamma(target));

  std::optional<CounterPair> best;
  std::optional<CounterPair> best_adjacent;
  int best_gain = 0;
  int best_adjacent_gain = 0;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      const int gain = xi.At(i) - xi.At(j);
      if (gain <= 0) continue;
      if (IsAdmissiblePair(n, {i, j})) {
        if (!best || gain > best_gain) {
          best = CounterPair{i, j};
          best_gain = gain;
        }
      } else if (!best_adjacent || gain > best_adjacent_gain) {
        best_adjacent = CounterPair{i, j};
        best_adjacent_gain = gain;
      }
    }
  }
  if (best) return *best;

  if (best_adjacent) {
    if (auto relabeled = RelabelAdjacentPair(xi, *best_adjacent);
        relabeled && IsAdmissiblePair(n, *relabeled) &&
        xi.At(relabeled->i) > xi.At(relabeled->j)) {
      return *relabeled;
    }
  }
  throw DiceError(ErrorCode::kInternalExhaustion,
                  "no admissible xi pair for nonstandard die " +
                      target.ToString());
}

Die CounterFromPair(int sides, CounterPair pair) {
  if (!IsAdmissiblePair(sides, pair)) {
    throw DiceError(ErrorCode::kPositionOutOfRange,
                    "pair " + PairString(pair) + " is not admissible for " +
                        std::to_string(sides) + " sides");
  }
  Die standard = Die::Standard(sides);
  // Face value k sits at position k-1 of the standard die.
  return OneStep(standard, static_cast<std::size_t>(pair.j),
                 static_cast<std::size_t>(pair.i - 1));
}

std::optional<CounterPair> PairFromCounter(const Die& die) {
  const int n = die.sides();
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      if (IsAdmissiblePair(n, {i, j}) && CounterFromPair(n, {i, j}) == die) {
        return CounterPair{i, j};
      }
    }
  }
  return std::nullopt;
}

CounterCertificate ConstructCounter(const Die& target) {
  const CounterPair pair = FindCounterPair(target);
  const XiProfile xi = ComputeXi(ComputeGamma(target));
  Die counter = CounterFromPair(target.sides(), pair);
  Rational payoff = Payoff(counter, target);
  if (payoff <= Rational(1, 2)) {
    throw DiceError(ErrorCode::kBeatVerificationFailed,
                    "counter " + counter.ToString() + " scores " +
                        FormatRational(payoff) + " against " +
                        target.ToString());
  }
  return CounterCertificate{target, pair, std::move(counter),
                            xi.At(pair.i) - xi.At(pair.j), payoff};
}

std::vector<RankedDie> RankOneStepDice(const Die& target, int workers) {
  CheckCounterSides(target);
  const int n = target.sides();
  const XiProfile xi = ComputeXi(ComputeGamma(target));
  const std::vector<Die> neighbors = OneStepNeighbors(Die::Standard(n));

  std::vector<std::optional<RankedDie>> slots(neighbors.size());
  ParallelFor(neighbors.size(), workers, [&](std::size_t k) {
    const Die& g = neighbors[k];
    const std::optional<CounterPair> pair = PairFromCounter(g);
    if (!pair) {
      throw DiceError(ErrorCode::kInternalExhaustion,
                      "neighbour " + g.ToString() +
                          " of the standard die has no generating pair");
    }
    slots[k] = RankedDie{g, *pair, xi.At(pair->i) - xi.At(pair->j),
                         Payoff(g, target)};
  });

  std::vector<RankedDie> ranked;
  ranked.reserve(slots.size());
  for (auto& s : slots) ranked.push_back(std::move(*s));
  std::ranges::stable_sort(ranked, [](const RankedDie& a, const RankedDie& b) {
    if (a.payoff != b.payoff) return a.payoff > b.payoff;
    return a.die < b.die;
  });
  return ranked;
}

std::vector<CounterCertificate> AllOneStepCounters(const Die& target,
                                                   int workers) {
  std::vector<CounterCertificate> out;
  for (RankedDie& r : RankOneStepDice(target, workers)) {
    if (r.payoff <= Rational(1, 2)) break;
    out.push_back(
        CounterCertificate{target, r.pair, std::move(r.die), r.gain, r.payoff});
  }
  return out;
}

bool XiAllEqual(const Die& die) {
  const XiProfile xi = ComputeXi(ComputeGamma(die));
  return std::ranges::adjacent_find(xi.values, std::ranges::not_equal_to{}) ==
         xi.values.end();
}

}  // namespace dicelab
