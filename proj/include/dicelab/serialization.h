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

#ifndef DICELAB_SERIALIZATION_H_
#define DICELAB_SERIALIZATION_H_

#include <string_view>
#include <vector>

#include <json.hpp>

#include "dicelab/analysis.h"
#include "dicelab/counter.h"
#include "dicelab/die.h"
#include "dicelab/payoff.h"

namespace dicelab {

using Json = nlohmann::ordered_json;

// Parses a die literal such as "[4,1,4,1]". The number of sides is the
// array length. Throws DiceError: kMalformedLiteral when the text is not a
// JSON array of integers, otherwise whatever Die::FromFaces throws.
Die ParseDie(std::string_view literal);

// Ascending integer array, e.g. [1,1,4,4].
Json ToJson(const Die& die);

// {"wins":W,"ties":T,"losses":L,"payoff":"p/q"}
Json PayoffJson(const PairTally& tally, const Rational& payoff);

// {"target":[...],"pair":[i,j],"counter":[...],"gain":g,"payoff":"p/q"}
Json ToJson(const CounterCertificate& cert);

// {"die":[...],"pair":[i,j],"gain":g,"payoff":"p/q","outcome":"AWins"}
Json ToJson(const RankedDie& entry);

// {"n":N,"space_size":M,"equilibria":[[[...],[...]],...],
//  "unique_standard":bool}
Json ToJson(const EquilibriumReport& report);

// {"n":N,"nodes":[[...],...],"edges":[[a,b],...]} with node indices.
Json ToJson(const BeatsDigraph& graph);

}  // namespace dicelab

#endif  // DICELAB_SERIALIZATION_H_
