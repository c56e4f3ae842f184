// Copyright 2026 The Quantal Authors
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

#ifndef QUANTAL_SERIALIZATION_H_
#define QUANTAL_SERIALIZATION_H_

#include <string>
#include <variant>

#include "json.hpp"

#include "quantal/extensive_form_game.h"
#include "quantal/normal_form_game.h"
#include "quantal/quantal_model.h"
#include "quantal/strategy.h"

namespace quantal {

using Json = nlohmann::ordered_json;

// Extensive-form games:
//   {"players": ["leader", "follower"], "zero_sum": bool,
//    "nodes": [{"id", "parent", "action", "player", "chance_probs"?,
//               "utility"?: [leader, follower]}],
//    "infosets": [{"player", "node_ids", "actions"}]}
// Normal-form games:
//   {"leader_payoffs": [[...]], "follower_payoffs": [[...]], "zero_sum": bool}
Json ToJson(const ExtensiveFormGame& game);
Json ToJson(const NormalFormGame& game);
ExtensiveFormGame ExtensiveFormGameFromJson(const Json& j);
NormalFormGame NormalFormGameFromJson(const Json& j);

using AnyGame = std::variant<NormalFormGame, ExtensiveFormGame>;
// Dispatches on the presence of "nodes".
AnyGame GameFromJson(const Json& j);

// {"kind": "logit", "lambda": 2.0}, {"kind": "ordering_based",
// "weights": [...]} (weights optional) or {"kind": "uniform"}.
Json ToJson(const QuantalModel& model);
QuantalModel ModelFromJson(const Json& j);

// {"player": "leader", "probs": [[...], ...]}: one array per infoset.
Json ToJson(const BehavioralStrategy& strategy);
BehavioralStrategy StrategyFromJson(const Json& j);

Json ReadJsonFile(const std::string& path);
// Pretty-printed with a trailing newline; byte-stable for equal input.
void WriteJsonFile(const std::string& path, const Json& j);

}  // namespace quantal

#endif  // QUANTAL_SERIALIZATION_H_
