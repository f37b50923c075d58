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

#include "dicelab/analysis.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <string>

#include "dicelab/enumeration.h"
#include "dicelab/parallel.h"
#include "dicelab/payoff.h"

namespace dicelab {

PayoffMatrix::PayoffMatrix(std::vector<Die> dice, int workers)
    : sides_(dice.empty() ? 0 : dice.front().sides()),
      dice_(std::move(dice)),
      scores_(dice_.size() * dice_.size(), 0) {
  const std::size_t m = dice_.size();
  ParallelFor(m, workers, [&](std::size_t a) {
    for (std::size_t b = 0; b < m; ++b) {
      scores_[a * m + b] = Tally(dice_[a], dice_[b]).Score();
    }
  });
}

EquilibriumReport FindPureNash(const PayoffMatrix& matrix) {
  const std::size_t m = matrix.size();
  // best[b]: highest score any die achieves against b.
  std::vector<std::int64_t> best(m, 0);
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t a = 0; a < m; ++a) {
      best[b] = std::max(best[b], matrix.Score(a, b));
    }
  }

  EquilibriumReport report;
  report.sides = matrix.sides();
  report.space_size = m;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const bool a_best = matrix.Score(a, b) == best[b];
      const bool b_best = matrix.Score(b, a) == best[a];
      if (a_best && b_best) {
        report.equilibria.emplace_back(matrix.die(a), matrix.die(b));
      }
    }
  }
  if (report.equilibria.size() == 1) {
    const auto& [x, y] = report.equilibria.front();
    report.unique_standard = x.IsStandard() && y.IsStandard();
  }
  return report;
}

EquilibriumReport FindPureNash(int sides, int workers) {
  return FindPureNash(PayoffMatrix(MaterializeDice(sides), workers));
}

bool VerifyStandardNeutrality(int sides) {
  const Die standard = Die::Standard(sides);
  const Rational half(1, 2);
  for (const Die& d : DieSpace(sides)) {
    if (Payoff(d, standard) != half) return false;
  }
  return true;
}

bool VerifyOneStepConnectivity(int sides) {
  const Die start = Die::Standard(sides);
  std::set<Die> seen{start};
  std::deque<Die> frontier{start};
  while (!frontier.empty()) {
    const Die current = std::move(frontier.front());
    frontier.pop_front();
    for (Die& next : OneStepNeighbors(current)) {
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  for (const Die& d : DieSpace(sides)) {
    if (!seen.contains(d)) return false;
  }
  return true;
}

BeatsDigraph::BeatsDigraph(const PayoffMatrix& matrix)
    : sides_(matrix.sides()),
      nodes_(matrix.dice()),
      adjacency_(matrix.size() * matrix.size(), 0),
      successors_(matrix.size()),
      in_degree_(matrix.size(), 0) {
  const std::size_t m = matrix.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (matrix.Score(a, b) > matrix.HalfScore()) {
        adjacency_[a * m + b] = 1;
        successors_[a].push_back(b);
        ++in_degree_[b];
        ++edge_count_;
      }
    }
  }
}

std::size_t BeatsDigraph::IndexOf(const Die& die) const {
  auto it = std::ranges::lower_bound(nodes_, die);
  if (it == nodes_.end() || *it != die) return nodes_.size();
  return static_cast<std::size_t>(it - nodes_.begin());
}

BeatsDigraph BuildBeatsDigraph(int sides, int workers) {
  return BeatsDigraph(PayoffMatrix(MaterializeDice(sides), workers));
}

std::vector<std::pair<Die, Die>> UnbeatenPairs(const BeatsDigraph& graph) {
  std::vector<std::pair<Die, Die>> out;
  for (std::size_t a = 0; a < graph.size(); ++a) {
    if (graph.InDegree(a) != 0) continue;
    for (std::size_t b = 0; b < graph.size(); ++b) {
      if (graph.InDegree(b) == 0) {
        out.emplace_back(graph.nodes()[a], graph.nodes()[b]);
      }
    }
  }
  return out;
}

std::vector<std::vector<Die>> FindNontransitiveCycles(const BeatsDigraph& graph,
                                                      int length) {
  if (length < 3) {
    throw DiceError(ErrorCode::kInvalidCycleLength,
                    "cycle length must be at least 3, got " +
                        std::to_string(length));
  }
  const auto want = static_cast<std::size_t>(length);
  std::vector<std::vector<Die>> cycles;
  std::vector<std::size_t> path;
  std::vector<char> on_path(graph.size(), 0);

  // Each cycle is found exactly once: from its smallest node, visiting only
  // larger nodes along the way.
  std::function<void(std::size_t)> extend = [&](std::size_t node) {
    const std::size_t start = path.front();
    if (path.size() == want) {
      if (graph.HasEdge(node, start)) {
        std::vector<Die> cycle;
        cycle.reserve(want);
        for (std::size_t k : path) cycle.push_back(graph.nodes()[k]);
        cycles.push_back(std::move(cycle));
      }
      return;
    }
    for (std::size_t next : graph.Successors(node)) {
      if (next <= start || on_path[next]) continue;
      on_path[next] = 1;
      path.push_back(next);
      extend(next);
      path.pop_back();
      on_path[next] = 0;
    }
  };

  for (std::size_t s = 0; s < graph.size(); ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    extend(s);
    on_path[s] = 0;
  }
  std::ranges::sort(cycles);
  return cycles;
}

std::vector<std::vector<Die>> FindNontransitiveCycles(int sides, int length,
                                                      int workers) {
  return FindNontransitiveCycles(BuildBeatsDigraph(sides, workers), length);
}

}  // namespace dicelab
