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

// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dicelab/analysis.h"
#include "dicelab/counter.h"
#include "dicelab/enumeration.h"
#include "dicelab/payoff.h"

namespace {

using dicelab::Die;
using dicelab::Rational;

Die D(std::vector<int> faces) { return Die::FromFaces(faces); }

const Rational kHalf(1, 2);

struct Criterion {
  int id;
  const char* name;
  std::function<std::string()> check;  // empty string on success
};

std::string MutualPayoffsX4Y4() {
  const Die x4 = D({1, 1, 4, 4});
  const Die y4 = D({2, 2, 2, 4});
  if (dicelab::Payoff(x4, y4) != Rational(7, 16)) return "payoff(X4,Y4) != 7/16";
  if (dicelab::Payoff(y4, x4) != Rational(9, 16)) return "payoff(Y4,X4) != 9/16";
  return "";
}

std::string CounterForX4() {
  const auto c = dicelab::ConstructCounter(D({1, 1, 4, 4}));
  if (!(c.pair == dicelab::CounterPair{1, 2})) return "pair is not (1,2)";
  if (c.counter != D({2, 2, 2, 4})) return "counter is " + c.counter.ToString();
  if (c.payoff != Rational(9, 16)) {
    return "payoff is " + dicelab::FormatRational(c.payoff);
  }
  return "";
}

std::string FourSidedDiceSpace() {
  const auto got = dicelab::MaterializeDice(4);
  const std::set<Die> want{D({1, 2, 3, 4}), D({1, 1, 4, 4}), D({2, 2, 2, 4}),
                           D({1, 3, 3, 3}), D({2, 2, 3, 3})};
  if (got.size() != 5) return "enumerated " + std::to_string(got.size());
  if (std::set<Die>(got.begin(), got.end()) != want) return "set differs";
  return "";
}

std::string StandardNeutrality() {
  for (int n = 1; n <= 8; ++n) {
    const Die s = Die::Standard(n);
    for (const Die& d : dicelab::DieSpace(n)) {
      if (dicelab::Payoff(d, s) != kHalf) {
        return "payoff(" + d.ToString() + ", S) != 1/2";
      }
    }
  }
  return "";
}

std::string UniqueEquilibrium() {
  for (int n = 4; n <= 8; ++n) {
    const auto r = dicelab::FindPureNash(n);
    const Die s = Die::Standard(n);
    if (r.equilibria != std::vector<std::pair<Die, Die>>{{s, s}}) {
      return "n=" + std::to_string(n) + ": " +
             std::to_string(r.equilibria.size()) + " equilibria";
    }
  }
  const auto r3 = dicelab::FindPureNash(3);
  if (r3.equilibria.size() != 4) {
    return "n=3: expected 4 equilibria, got " +
           std::to_string(r3.equilibria.size());
  }
  return "";
}

std::string CounterConstruction() {
  for (int n = 4; n <= 8; ++n) {
    for (const Die& b : dicelab::DieSpace(n)) {
      if (b.IsStandard()) continue;
      try {
        const auto c = dicelab::ConstructCounter(b);
        if (c.payoff <= kHalf) return "weak counter for " + b.ToString();
      } catch (const dicelab::DiceError& e) {
        return b.ToString() + ": " + e.what();
      }
      if (dicelab::AllOneStepCounters(b).empty()) {
        return "no one-step counter for " + b.ToString();
      }
    }
  }
  return "";
}

std::string XiCharacterization() {
  for (int n = 4; n <= 8; ++n) {
    for (const Die& b : dicelab::DieSpace(n)) {
      if (dicelab::XiAllEqual(b) != b.IsStandard()) {
        return "mismatch at " + b.ToString();
      }
    }
  }
  if (!dicelab::XiAllEqual(D({2, 2, 2}))) return "[2,2,2] xi not all equal";
  return "";
}

std::string Connectivity() {
  for (int n = 1; n <= 8; ++n) {
    if (!dicelab::VerifyOneStepConnectivity(n)) {
      return "disconnected at n=" + std::to_string(n);
    }
  }
  return "";
}

std::string NoFloatingPoint() {
  const std::filesystem::path root(DICELAB_SOURCE_DIR);
  const std::regex fp(R"(\b(float|double|long double)\b)");
  for (const auto& dir : {root / "src", root / "include" / "dicelab"}) {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.path().filename() == "cli.cc") continue;
      std::ifstream in(entry.path());
      std::stringstream text;
      text << in.rdbuf();
      const std::string body = text.str();
      if (std::regex_search(body, fp)) {
        return "floating-point type in " + entry.path().filename().string();
      }
    }
  }
  return "";
}

std::string PropertySuite() {
  for (int n = 1; n <= 8; ++n) {
    const auto space = dicelab::MaterializeDice(n);
    for (const Die& a : space) {
      for (const Die& b : space) {
        const Rational p = dicelab::Payoff(a, b);
        if (p + dicelab::Payoff(b, a) != Rational(1)) {
          return "constant-sum fails at " + a.ToString() + "," + b.ToString();
        }
        const auto o = dicelab::Beats(a, b);
        if ((o == dicelab::Outcome::kAWins) != (p > kHalf) ||
            (o == dicelab::Outcome::kTie) != (p == kHalf)) {
          return "beats/payoff mismatch at " + a.ToString();
        }
        if (!(dicelab::Tally(a, b) == dicelab::TallyReference(a, b))) {
          return "fast/reference tally mismatch at " + a.ToString() + "," +
                 b.ToString();
        }
      }
    }
  }
  for (int n = 1; n <= 10; ++n) {
    std::uint64_t yielded = 0;
    for (const Die& d : dicelab::DieSpace(n)) {
      (void)d;
      ++yielded;
    }
    if (yielded != dicelab::CountDice(n)) {
      return "enumerator/counter disagree at n=" + std::to_string(n);
    }
  }
  return NoFloatingPoint();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "payoff([1,1,4,4],[2,2,2,4]) = 7/16, reverse 9/16", MutualPayoffsX4Y4},
      {2, "counter to [1,1,4,4] is [2,2,2,4] via (1,2) at 9/16", CounterForX4},
      {3, "exactly five 4-sided dice", FourSidedDiceSpace},
      {4, "standard die ties every die, n=1..8", StandardNeutrality},
      {5, "unique pure equilibrium (S,S) for n=4..8; 4 at n=3",
       UniqueEquilibrium},
      {6, "counter construction and one-step counters, n=4..8",
       CounterConstruction},
      {7, "all-equal xi iff standard, n=4..8; [2,2,2] exception",
       XiCharacterization},
      {8, "one-step graph connected, n=1..8", Connectivity},
      {9, "constant-sum, beats consistency, counters agree, fast=reference",
       PropertySuite},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (problem.empty()) {
      std::printf("[PASS] %d %s (%lld ms)\n", c.id, c.name,
                  static_cast<long long>(ms));
    } else {
      ++failed;
      std::printf("[FAIL] %d %s: %s\n", c.id, c.name, problem.c_str());
    }
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
