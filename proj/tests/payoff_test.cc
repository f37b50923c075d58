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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "dicelab/enumeration.h"

namespace dicelab {
namespace {

Die D(std::vector<int> faces) { return Die::FromFaces(faces); }

const Rational kHalf(1, 2);

TEST(TallyTest, ExampleDice) {
  // Brute-forced over the 16 face pairs.
  EXPECT_EQ(Tally(D({1, 1, 4, 4}), D({2, 2, 2, 4})), (PairTally{6, 2, 8}));
  EXPECT_EQ(Tally(D({2, 2, 3, 3}), D({1, 1, 4, 4})), (PairTally{8, 0, 8}));
}

TEST(TallyTest, SelfAndStandard) {
  for (const Die& d : DieSpace(6)) {
    const PairTally t = Tally(d, d);
    EXPECT_EQ(t.wins, t.losses);
  }
  for (int n = 1; n <= 10; ++n) {
    const Die s = Die::Standard(n);
    const std::int64_t off = static_cast<std::int64_t>(n) * (n - 1) / 2;
    EXPECT_EQ(Tally(s, s), (PairTally{off, n, off}));
  }
}

TEST(TallyTest, MismatchedSides) {
  try {
    Tally(Die::Standard(4), Die::Standard(5));
    FAIL() << "expected MismatchedSides";
  } catch (const DiceError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMismatchedSides);
  }
  EXPECT_THROW(Payoff(Die::Standard(3), Die::Standard(2)), DiceError);
  EXPECT_THROW(Beats(Die::Standard(3), Die::Standard(2)), DiceError);
}

TEST(PayoffTest, ExampleValues) {
  EXPECT_EQ(Payoff(D({1, 1, 4, 4}), D({2, 2, 2, 4})), Rational(7, 16));
  EXPECT_EQ(Payoff(D({2, 2, 2, 4}), D({1, 1, 4, 4})), Rational(9, 16));
  EXPECT_EQ(FormatRational(Payoff(D({1, 1, 4, 4}), D({2, 2, 2, 4}))), "7/16");
  EXPECT_EQ(FormatRational(kHalf), "1/2");
}

TEST(PayoffTest, EveryDieTiesTheStandardDie) {
  for (int n = 1; n <= 8; ++n) {
    const Die s = Die::Standard(n);
    for (const Die& d : DieSpace(n)) {
      EXPECT_EQ(Payoff(d, s), kHalf) << d.ToString();
      EXPECT_EQ(Payoff(s, d), kHalf) << d.ToString();
    }
  }
}

TEST(PayoffTest, StandardTieMatchesPerFaceClosedForm) {
  // Against S_n a face f wins with probability (f-1)/n and ties with 1/n.
  for (int n = 1; n <= 8; ++n) {
    const Die s = Die::Standard(n);
    const std::int64_t nn = n;
    for (const Die& d : DieSpace(n)) {
      Rational closed(0);
      for (int f : d.faces()) {
        closed += Rational(1, nn) * (Rational(f - 1, nn) + Rational(1, 2 * nn));
        // Each face's share of the tally agrees with its closed-form term.
        std::int64_t wins = 0;
        std::int64_t ties = 0;
        for (int y : s.faces()) {
          wins += f > y;
          ties += f == y;
        }
        EXPECT_EQ(Rational(2 * wins + ties, 2 * nn),
                  Rational(f - 1, nn) + Rational(1, 2 * nn));
      }
      EXPECT_EQ(closed, Payoff(d, s));
      EXPECT_EQ(closed, kHalf);
    }
  }
}

TEST(PayoffTest, DenominatorDividesTwoNSquared) {
  for (int n = 1; n <= 6; ++n) {
    const auto space = MaterializeDice(n);
    for (const Die& a : space) {
      for (const Die& b : space) {
        const Rational p = Payoff(a, b);
        EXPECT_EQ((2 * n * n) % p.denominator(), 0);
        EXPECT_GE(p, Rational(0));
        EXPECT_LE(p, Rational(1));
      }
    }
  }
}

TEST(BeatsTest, Examples) {
  EXPECT_EQ(Beats(D({2, 2, 2, 4}), D({1, 1, 4, 4})), Outcome::kAWins);
  EXPECT_EQ(Beats(D({1, 1, 4, 4}), D({2, 2, 2, 4})), Outcome::kBWins);
  EXPECT_EQ(Beats(D({1, 1, 4, 4}), D({1, 1, 4, 4})), Outcome::kTie);
  EXPECT_EQ(Beats(D({2, 2, 3, 3}), D({1, 1, 4, 4})), Outcome::kTie);
}

TEST(PayoffPropertyTest, ConstantSumAndBeatsConsistencyExhaustive) {
  for (int n = 1; n <= 6; ++n) {
    const auto space = MaterializeDice(n);
    for (const Die& a : space) {
      for (const Die& b : space) {
        const Rational p = Payoff(a, b);
        EXPECT_EQ(p + Payoff(b, a), Rational(1));
        const Outcome o = Beats(a, b);
        EXPECT_EQ(o == Outcome::kAWins, p > kHalf);
        EXPECT_EQ(o == Outcome::kBWins, p < kHalf);
        EXPECT_EQ(o == Outcome::kTie, p == kHalf);
      }
    }
  }
}

TEST(PayoffPropertyTest, ConstantSumSampled) {
  std::mt19937 rng(20261016);
  for (int n = 7; n <= 8; ++n) {
    const auto space = MaterializeDice(n);
    std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
      const Die& a = space[pick(rng)];
      const Die& b = space[pick(rng)];
      EXPECT_EQ(Payoff(a, b) + Payoff(b, a), Rational(1));
    }
  }
}

TEST(PayoffPropertyTest, MergeMatchesDoubleLoop) {
  for (int n = 1; n <= 8; ++n) {
    const auto space = MaterializeDice(n);
    for (const Die& a : space) {
      for (const Die& b : space) {
        ASSERT_EQ(Tally(a, b), TallyReference(a, b))
            << a.ToString() << " vs " << b.ToString();
      }
    }
  }
}

}  // namespace
}  // namespace dicelab
