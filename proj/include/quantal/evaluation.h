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

#ifndef QUANTAL_EVALUATION_H_
#define QUANTAL_EVALUATION_H_

#include <array>
#include <span>
#include <vector>

#include "quantal/extensive_form_game.h"
#include "quantal/normal_form_game.h"
#include "quantal/strategy.h"

namespace quantal {

// Per-history reach contributions of the leader, follower and chance.
struct ReachProbabilities {
  std::vector<double> leader;
  std::vector<double> follower;
  std::vector<double> chance;

  double own(Player p, int node) const {
    return p == Player::kLeader ? leader[node] : follower[node];
  }
  // pi_{-p}(h): everything except player p, chance included.
  double others(Player p, int node) const {
    return chance[node] *
           (p == Player::kLeader ? follower[node] : leader[node]);
  }
  double total(int node) const {
    return leader[node] * follower[node] * chance[node];
  }
};

ReachProbabilities ComputeReach(const ExtensiveFormGame& game,
                                const StrategyProfile& profile);

// Own reach pi_p(I) of every infoset of `strategy`'s player. Under perfect
// recall this is the same for every member history.
std::vector<double> InfosetOwnReach(const ExtensiveFormGame& game,
                                    const BehavioralStrategy& strategy);

// Expected utility of both players, indexed by PlayerIndex.
std::array<double, 2> ExpectedUtility(const ExtensiveFormGame& game,
                                      const StrategyProfile& profile);
std::array<double, 2> ExpectedUtility(const NormalFormGame& game,
                                      std::span<const double> leader,
                                      std::span<const double> follower);
std::array<double, 2> ExpectedUtility(const NormalFormGame& game,
                                      const StrategyProfile& profile);

// v_p(sigma, I) and v_p(sigma, I, a) for every infoset of player p.
struct CounterfactualValues {
  Player player = Player::kLeader;
  std::vector<double> infoset_value;
  // Flat, laid out like BehavioralStrategy of the same player.
  std::vector<double> action_value;
};

CounterfactualValues ComputeCounterfactualValues(const ExtensiveFormGame& game,
                                                 const StrategyProfile& profile,
                                                 Player player);

// Reusable buffers for the hot loops of the solvers; all passes are O(nodes).
class TreeEvaluator {
 public:
  explicit TreeEvaluator(const ExtensiveFormGame& game);

  const ExtensiveFormGame& game() const { return *game_; }

  // Fills node values for both players (expected utility below each node).
  void NodeValues(const StrategyProfile& profile);
  void NodeValues(const BehavioralStrategy& leader,
                  const BehavioralStrategy& follower);
  // Reach of every node from chance and the strategy of `player`'s opponent.
  void OthersReach(const BehavioralStrategy& opponent, Player player);
  // Own reach of every node for `strategy.player()`.
  void OwnReach(const BehavioralStrategy& strategy);

  // Counterfactual action values of `player` into `out` (flat layout).
  // Requires NodeValues and OthersReach(opponent, player) to be current.
  void ActionValues(Player player, std::span<double> out) const;

  double value(Player p, int node) const {
    return values_[PlayerIndex(p)][node];
  }
  double others_reach(int node) const { return others_reach_[node]; }
  double own_reach(int node) const { return own_reach_[node]; }
  std::array<double, 2> root_values() const {
    return {values_[0][0], values_[1][0]};
  }

 private:
  const ExtensiveFormGame* game_;
  std::array<std::vector<double>, 2> values_;
  std::vector<double> others_reach_;
  std::vector<double> own_reach_;
};

}  // namespace quantal

#endif  // QUANTAL_EVALUATION_H_
