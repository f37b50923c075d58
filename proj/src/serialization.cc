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

#include <limits>
#include <string>

namespace dicelab {

namespace {

Json PairJson(CounterPair p) { return Json::array({p.i, p.j}); }

}  // namespace

Die ParseDie(std::string_view literal) {
  const Json doc = Json::parse(literal, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_array()) {
    throw DiceError(ErrorCode::kMalformedLiteral,
                    "die literal must be a JSON array of integers: " +
                        std::string(literal));
  }
  std::vector<int> faces;
  faces.reserve(doc.size());
  for (const Json& v : doc) {
    if (!v.is_number_integer()) {
      throw DiceError(ErrorCode::kMalformedLiteral,
                      "die literal must be a JSON array of integers: " +
                          std::string(literal));
    }
    const auto x = v.get<long long>();
    if (x < std::numeric_limits<int>::min() ||
        x > std::numeric_limits<int>::max()) {
      throw DiceError(ErrorCode::kFaceOutOfRange,
                      "face " + std::to_string(x) + " is out of range");
    }
    faces.push_back(static_cast<int>(x));
  }
  return Die::FromFaces(faces);
}

Json ToJson(const Die& die) {
  Json out = Json::array();
  for (int f : die.faces()) out.push_back(f);
  return out;
}

Json PayoffJson(const PairTally& tally, const Rational& payoff) {
  return Json{{"wins", tally.wins},
              {"ties", tally.ties},
              {"losses", tally.losses},
              {"payoff", FormatRational(payoff)}};
}

Json ToJson(const CounterCertificate& cert) {
  return Json{{"target", ToJson(cert.target)},
              {"pair", PairJson(cert.pair)},
              {"counter", ToJson(cert.counter)},
              {"gain", cert.gain},
              {"payoff", FormatRational(cert.payoff)}};
}

Json ToJson(const RankedDie& entry) {
  const Rational half(1, 2);
  const Outcome outcome = entry.payoff > half    ? Outcome::kAWins
                          : entry.payoff < half ? Outcome::kBWins
                                                : Outcome::kTie;
  return Json{{"die", ToJson(entry.die)},
              {"pair", PairJson(entry.pair)},
              {"gain", entry.gain},
              {"payoff", FormatRational(entry.payoff)},
              {"outcome", OutcomeName(outcome)}};
}

Json ToJson(const EquilibriumReport& report) {
  Json pairs = Json::array();
  for (const auto& [a, b] : report.equilibria) {
    pairs.push_back(Json::array({ToJson(a), ToJson(b)}));
  }
  return Json{{"n", report.sides},
              {"space_size", report.space_size},
              {"equilibria", std::move(pairs)},
              {"unique_standard", report.unique_standard}};
}

Json ToJson(const BeatsDigraph& graph) {
  Json nodes = Json::array();
  for (const Die& d : graph.nodes()) nodes.push_back(ToJson(d));
  Json edges = Json::array();
  for (std::size_t a = 0; a < graph.size(); ++a) {
    for (std::size_t b : graph.Successors(a)) {
      edges.push_back(Json::array({a, b}));
    }
  }
  return Json{{"n", graph.sides()},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)}};
}

}  // namespace dicelab
