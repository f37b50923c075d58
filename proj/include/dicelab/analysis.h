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

#ifndef DICELAB_ANALYSIS_H_
#define DICELAB_ANALYSIS_H_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dicelab/die.h"

namespace dicelab {

// Full tournament over D_n. Entry (a, b) holds 2*wins + ties for row die a
// against column die b, i.e. the payoff scaled by the common denominator
// 2n^2, so every comparison stays in exact integers.
class PayoffMatrix {
 public:
  PayoffMatrix(std::vector<Die> dice, int workers = 1);

  int sides() const { return sides_; }
  std::size_t size() const { return dice_.size(); }
  const std::vector<Die>& dice() const { return dice_; }
  const Die& die(std::size_t k) const { return dice_[k]; }

  std::int64_t Score(std::size_t a, std::size_t b) const {
    return scores_[a * dice_.size() + b];
  }
  // Score of an exact tie, n^2.
  std::int64_t HalfScore() const {
    return static_cast<std::int64_t>(sides_) * sides_;
  }

 private:
  int sides_;
  std::vector<Die> dice_;
  std::vector<std::int64_t> scores_;
};

struct EquilibriumReport {
  int sides = 0;
  std::size_t space_size = 0;
  // Pure-strategy equilibria (A, B) in lexicographic order.
  std::vector<std::pair<Die, Die>> equilibria;
  // True iff equilibria is exactly [(S_n, S_n)].
  bool unique_standard = false;
};

// A pair is listed iff each die is a payoff-maximizing reply to the other:
// payoff(A, B) >= payoff(A', B) and payoff(B, A) >= payoff(B', A) for all
// A', B' in D_n.
EquilibriumReport FindPureNash(int sides, int workers = 1);
EquilibriumReport FindPureNash(const PayoffMatrix& matrix);

// True iff payoff(d, S_n) == 1/2 for every d in D_n.
bool VerifyStandardNeutrality(int sides);

// True iff breadth-first search over one-steps from S_n reaches all of D_n.
bool VerifyOneStepConnectivity(int sides);

// Directed "beats" relation over D_n: edge a -> b iff a beats b.
class BeatsDigraph {
 public:
  explicit BeatsDigraph(const PayoffMatrix& matrix);

  int sides() const { return sides_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<Die>& nodes() const { return nodes_; }

  bool HasEdge(std::size_t from, std::size_t to) const {
    return adjacency_[from * nodes_.size() + to] != 0;
  }
  const std::vector<std::size_t>& Successors(std::size_t from) const {
    return successors_[from];
  }
  std::size_t InDegree(std::size_t node) const { return in_degree_[node]; }
  std::size_t EdgeCount() const { return edge_count_; }

  // Index of `die` among nodes(), or size() if absent.
  std::size_t IndexOf(const Die& die) const;

 private:
  int sides_;
  std::vector<Die> nodes_;
  std::vector<char> adjacency_;
  std::vector<std::vector<std::size_t>> successors_;
  std::vector<std::size_t> in_degree_;
  std::size_t edge_count_ = 0;
};

BeatsDigraph BuildBeatsDigraph(int sides, int workers = 1);

// Equilibria read off the digraph instead of from best responses: pairs of
// dice that no die beats.
std::vector<std::pair<Die, Die>> UnbeatenPairs(const BeatsDigraph& graph);

// All directed cycles with exactly `length` nodes, each rotated to start at
// its smallest node, sorted. Throws kInvalidCycleLength when length < 3.
std::vector<std::vector<Die>> FindNontransitiveCycles(const BeatsDigraph& graph,
                                                      int length);
std::vector<std::vector<Die>> FindNontransitiveCycles(int sides, int length,
                                                      int workers = 1);

}  // namespace dicelab

#endif  // DICELAB_ANALYSIS_H_
