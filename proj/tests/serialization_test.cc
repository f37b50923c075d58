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

#include "dicelab/serialization.h"

#include <gtest/gtest.h>

#include "dicelab/enumeration.h"

namespace dicelab {
namespace {

ErrorCode ParseError(std::string_view literal) {
  try {
    ParseDie(literal);
  } catch (const DiceError& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted " << literal;
  return ErrorCode::kInvalidSides;
}

TEST(ParseDieTest, AcceptsAndCanonicalizes) {
  EXPECT_EQ(ParseDie("[4,1,4,1]").ToString(), "[1,1,4,4]");
  EXPECT_EQ(ParseDie(" [ 1 ] ").ToString(), "[1]");
}

TEST(ParseDieTest, Rejects) {
  EXPECT_EQ(ParseError("[1,1,4"), ErrorCode::kMalformedLiteral);
  EXPECT_EQ(ParseError("{\"a\":1}"), ErrorCode::kMalformedLiteral);
  EXPECT_EQ(ParseError("[1,2.5,2.5]"), ErrorCode::kMalformedLiteral);
  EXPECT_EQ(ParseError("[\"1\"]"), ErrorCode::kMalformedLiteral);
  EXPECT_EQ(ParseError("[1,1,1,4]"), ErrorCode::kWrongSum);
  EXPECT_EQ(ParseError("[0,3,3]"), ErrorCode::kFaceOutOfRange);
  EXPECT_EQ(ParseError("[99999999999,1]"), ErrorCode::kFaceOutOfRange);
  EXPECT_EQ(ParseError("[]"), ErrorCode::kInvalidSides);
}

TEST(SerializationTest, DieRoundTrip) {
  for (int n = 1; n <= 7; ++n) {
    for (const Die& d : DieSpace(n)) {
      const std::string text = ToJson(d).dump();
      EXPECT_EQ(text, d.ToString());
      EXPECT_EQ(ParseDie(text), d);
    }
  }
}

TEST(SerializationTest, PayoffDocument) {
  const Die a = ParseDie("[1,1,4,4]");
  const Die b = ParseDie("[2,2,2,4]");
  EXPECT_EQ(PayoffJson(Tally(a, b), Payoff(a, b)).dump(),
            R"({"wins":6,"ties":2,"losses":8,"payoff":"7/16"})");
}

TEST(SerializationTest, CertificateDocument) {
  const CounterCertificate c = ConstructCounter(ParseDie("[1,1,4,4]"));
  const std::string text = ToJson(c).dump();
  EXPECT_EQ(text,
            R"({"target":[1,1,4,4],"pair":[1,2],"counter":[2,2,2,4],)"
            R"("gain":2,"payoff":"9/16"})");
  const Json back = Json::parse(text);
  EXPECT_EQ(ParseDie(back["counter"].dump()), c.counter);
  EXPECT_EQ(ParseDie(back["target"].dump()), c.target);
  EXPECT_EQ(back["pair"][0].get<int>(), c.pair.i);
  EXPECT_EQ(back["pair"][1].get<int>(), c.pair.j);
}

TEST(SerializationTest, EquilibriumAndGraphDocuments) {
  EXPECT_EQ(ToJson(FindPureNash(4)).dump(),
            R"({"n":4,"space_size":5,"equilibria":[[[1,2,3,4],[1,2,3,4]]],)"
            R"("unique_standard":true})");
  const Json g = ToJson(BuildBeatsDigraph(4));
  EXPECT_EQ(g["nodes"].size(), 5u);
  EXPECT_EQ(g["edges"].size(), 5u);
  for (const Json& e : g["edges"]) {
    const Die a = ParseDie(g["nodes"][e[0].get<std::size_t>()].dump());
    const Die b = ParseDie(g["nodes"][e[1].get<std::size_t>()].dump());
    EXPECT_EQ(Beats(a, b), Outcome::kAWins);
  }
}

TEST(SerializationTest, RankedEntry) {
  const auto ranked = RankOneStepDice(ParseDie("[1,1,4,4]"));
  EXPECT_EQ(ToJson(ranked.front()).dump(),
            R"({"die":[2,2,2,4],"pair":[1,2],"gain":2,"payoff":"9/16",)"
            R"("outcome":"AWins"})");
  EXPECT_EQ(ToJson(ranked.back())["outcome"], "BWins");
}

}  // namespace
}  // namespace dicelab
