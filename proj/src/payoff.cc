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

#include "dicelab/payoff.h"

#include <cstddef>

namespace dicelab {

namespace {

void CheckSameSides(const Die& a, const Die& b) {
  if (a.sides() != b.sides()) {
    throw DiceError(ErrorCode::kMismatchedSides,
                    "dice have " + std::to_string(a.sides()) + " and " +
                        std::to_string(b.sides()) + " sides");
  }
}

}  // namespace

std::string FormatRational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" +
         std::to_string(r.denominator());
}

const char* OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kAWins: return "AWins";
    case Outcome::kBWins: return "BWins";
    case Outcome::kTie: return "Tie";
  }
  return "Unknown";
}

PairTally Tally(const Die& a, const Die& b) {
  CheckSameSides(a, b);
  const auto fa = a.faces();
  const auto fb = b.faces();
  const std::size_t n = fb.size();
  PairTally t;
  // below: #b faces < current a face; upto: #b faces <= current a face.
  std::size_t below = 0;
  std::size_t upto = 0;
  for (int x : fa) {
    while (below < n && fb[below] < x) ++below;
    if (upto < below) upto = below;
    while (upto < n && fb[upto] == x) ++upto;
    t.wins += static_cast<std::int64_t>(below);
    t.ties += static_cast<std::int64_t>(upto - below);
  }
  const auto n64 = static_cast<std::int64_t>(n);
  t.losses = n64 * n64 - t.wins - t.ties;
  return t;
}

PairTally TallyReference(const Die& a, const Die& b) {
  CheckSameSides(a, b);
  PairTally t;
  for (int x : a.faces()) {
    for (int y : b.faces()) {
      if (x > y) {
        ++t.wins;
      } else if (x == y) {
        ++t.ties;
      } else {
        ++t.losses;
      }
    }
  }
  return t;
}

Rational Payoff(const Die& a, const Die& b) {
  const PairTally t = Tally(a, b);
  const auto n = static_cast<std::int64_t>(a.sides());
  return Rational(t.Score(), 2 * n * n);
}

Outcome Beats(const Die& a, const Die& b) {
  const PairTally t = Tally(a, b);
  if (t.wins > t.losses) return Outcome::kAWins;
  if (t.losses > t.wins) return Outcome::kBWins;
  return Outcome::kTie;
}

}  // namespace dicelab
