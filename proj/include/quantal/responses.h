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

#ifndef QUANTAL_RESPONSES_H_
#define QUANTAL_RESPONSES_H_

#include <array>
#include <span>
#include <vector>

#include "quantal/evaluation.h"
#include "quantal/extensive_form_game.h"
#include "quantal/normal_form_game.h"
#include "quantal/quantal_model.h"
#include "quantal/strategy.h"

namespace quantal {

// Canonical quantal response of the follower to a leader mixed strategy.
MixedStrategy NfgQuantalResponse(const NormalFormGame& game,
                                 std::span<const double> leader,
                                 const QuantalModel& model);

// Counterfactual quantal response: at every follower infoset the action
// probabilities follow the model applied to the follower's counterfactual
// action values, where the values below are computed with the response
// itself. Defined at unreachable infosets too.
BehavioralStrategy Clqr(const ExtensiveFormGame& game,
                        const BehavioralStrategy& leader,
                        const QuantalModel& model);

struct BestResponse {
  BehavioralStrategy strategy;
  // Expected utility of the responder.
  double value = 0.0;
};

// Pure best response; ties go to the lowest action index.
BestResponse ComputeBestResponse(const NormalFormGame& game,
                                 const BehavioralStrategy& opponent);
BestResponse ComputeBestResponse(const ExtensiveFormGame& game,
                                 const BehavioralStrategy& opponent);

// Follower best response that breaks ties in the leader's favour. `value` is
// the follower's utility; `leader_value` the leader's.
struct FavoringBestResponse {
  BehavioralStrategy strategy;
  double value = 0.0;
  double leader_value = 0.0;
};
FavoringBestResponse LeaderFavoringBestResponse(const NormalFormGame& game,
                                                const BehavioralStrategy& leader);
FavoringBestResponse LeaderFavoringBestResponse(
    const ExtensiveFormGame& game, const BehavioralStrategy& leader);

// Best-response value minus current value of `player` in `profile`.
double EpsilonBrCertificate(const NormalFormGame& game,
                            const StrategyProfile& profile, Player player);
double EpsilonBrCertificate(const ExtensiveFormGame& game,
                            const StrategyProfile& profile, Player player);

// Repeated-response workhorse for extensive-form solvers. Owns its buffers;
// one instance per thread.
class ResponseEngine {
 public:
  enum class Rule { kQuantal, kBest, kBestFavoringOpponent };

  explicit ResponseEngine(const ExtensiveFormGame& game);

  // Computes the response of Opponent(fixed.player()) to `fixed`. The model
  // is only read for Rule::kQuantal.
  const BehavioralStrategy& Respond(const BehavioralStrategy& fixed, Rule rule,
                                    const QuantalModel* model = nullptr);

  const BehavioralStrategy& response() const { return response_; }
  // Expected utilities of both players under (fixed, response), indexed by
  // PlayerIndex.
  std::array<double, 2> values() const { return {values_[0][0], values_[1][0]}; }
  // Counterfactual action values of the responder computed during the sweep.
  std::span<const double> responder_action_values() const { return cfv_; }

 private:
  const ExtensiveFormGame* game_;
  BehavioralStrategy response_;
  std::array<std::vector<double>, 2> values_;
  std::vector<double> others_reach_;
  std::vector<double> cfv_;
  std::vector<double> other_cfv_;
};

}  // namespace quantal

#endif  // QUANTAL_RESPONSES_H_
