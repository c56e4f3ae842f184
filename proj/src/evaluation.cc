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

#include "quantal/evaluation.h"

namespace quantal {

ReachProbabilities ComputeReach(const ExtensiveFormGame& game,
                                const StrategyProfile& profile) {
  profile.leader.Validate(game);
  profile.follower.Validate(game);
  const int n = game.num_nodes();
  ReachProbabilities r{std::vector<double>(n, 1.0),
                       std::vector<double>(n, 1.0),
                       std::vector<double>(n, 1.0)};
  for (int id = 1; id < n; ++id) {
    const EfgNode& node = game.node(id);
    const EfgNode& parent = game.node(node.parent);
    r.leader[id] = r.leader[node.parent];
    r.follower[id] = r.follower[node.parent];
    r.chance[id] = r.chance[node.parent];
    switch (parent.player) {
      case Player::kLeader:
        r.leader[id] *= profile.leader.prob(parent.infoset, node.action);
        break;
      case Player::kFollower:
        r.follower[id] *= profile.follower.prob(parent.infoset, node.action);
        break;
      case Player::kChance:
        r.chance[id] *= node.chance_prob;
        break;
      case Player::kTerminal:
        break;
    }
  }
  return r;
}

std::vector<double> InfosetOwnReach(const ExtensiveFormGame& game,
                                    const BehavioralStrategy& strategy) {
  TreeEvaluator eval(game);
  eval.OwnReach(strategy);
  const Player p = strategy.player();
  std::vector<double> out(game.num_infosets(p));
  for (int i = 0; i < game.num_infosets(p); ++i) {
    out[i] = eval.own_reach(game.infoset(p, i).nodes.front());
  }
  return out;
}

std::array<double, 2> ExpectedUtility(const ExtensiveFormGame& game,
                                      const StrategyProfile& profile) {
  const ReachProbabilities reach = ComputeReach(game, profile);
  std::array<double, 2> eu = {0.0, 0.0};
  for (int id = 0; id < game.num_nodes(); ++id) {
    const EfgNode& node = game.node(id);
    if (!node.is_terminal()) continue;
    const double pi = reach.total(id);
    eu[0] += pi * node.utility[0];
    eu[1] += pi * node.utility[1];
  }
  return eu;
}

std::array<double, 2> ExpectedUtility(const NormalFormGame& game,
                                      std::span<const double> leader,
                                      std::span<const double> follower) {
  if (static_cast<int>(leader.size()) != game.rows() ||
      static_cast<int>(follower.size()) != game.cols()) {
    throw DomainError("strategy sizes do not match the game");
  }
  std::array<double, 2> eu = {0.0, 0.0};
  for (Player p : {Player::kLeader, Player::kFollower}) {
    const std::vector<double> rows = LeaderActionValues(game, p, follower);
    double acc = 0.0;
    for (int r = 0; r < game.rows(); ++r) acc += leader[r] * rows[r];
    eu[PlayerIndex(p)] = acc;
  }
  return eu;
}

std::array<double, 2> ExpectedUtility(const NormalFormGame& game,
                                      const StrategyProfile& profile) {
  profile.leader.Validate(game);
  profile.follower.Validate(game);
  return ExpectedUtility(game, profile.leader.flat(), profile.follower.flat());
}

CounterfactualValues ComputeCounterfactualValues(const ExtensiveFormGame& game,
                                                 const StrategyProfile& profile,
                                                 Player player) {
  profile.leader.Validate(game);
  profile.follower.Validate(game);
  TreeEvaluator eval(game);
  eval.NodeValues(profile);
  eval.OthersReach(profile.of(Opponent(player)), player);
  CounterfactualValues cfv;
  cfv.player = player;
  cfv.action_value.assign(game.num_infoset_actions(player), 0.0);
  eval.ActionValues(player, cfv.action_value);
  const BehavioralStrategy& own = profile.of(player);
  cfv.infoset_value.assign(game.num_infosets(player), 0.0);
  for (int i = 0; i < game.num_infosets(player); ++i) {
    const Infoset& info = game.infoset(player, i);
    double v = 0.0;
    for (int a = 0; a < info.num_actions; ++a) {
      v += own.prob(i, a) * cfv.action_value[info.offset + a];
    }
    cfv.infoset_value[i] = v;
  }
  return cfv;
}

TreeEvaluator::TreeEvaluator(const ExtensiveFormGame& game)
    : game_(&game),
      values_{std::vector<double>(game.num_nodes()),
              std::vector<double>(game.num_nodes())},
      others_reach_(game.num_nodes(), 1.0),
      own_reach_(game.num_nodes(), 1.0) {}

void TreeEvaluator::NodeValues(const StrategyProfile& profile) {
  NodeValues(profile.leader, profile.follower);
}

void TreeEvaluator::NodeValues(const BehavioralStrategy& leader,
                               const BehavioralStrategy& follower) {
  const auto& nodes = game_->nodes();
  double* v0 = values_[0].data();
  double* v1 = values_[1].data();
  for (int id = game_->num_nodes() - 1; id >= 0; --id) {
    const EfgNode& node = nodes[id];
    if (node.is_terminal()) {
      v0[id] = node.utility[0];
      v1[id] = node.utility[1];
      continue;
    }
    double a0 = 0.0, a1 = 0.0;
    if (node.player == Player::kChance) {
      for (int a = 0; a < node.num_children; ++a) {
        const int c = node.first_child + a;
        const double w = nodes[c].chance_prob;
        a0 += w * v0[c];
        a1 += w * v1[c];
      }
    } else {
      const BehavioralStrategy& s =
          node.player == Player::kLeader ? leader : follower;
      const double* probs = s.flat().data() + s.offset(node.infoset);
      for (int a = 0; a < node.num_children; ++a) {
        const int c = node.first_child + a;
        a0 += probs[a] * v0[c];
        a1 += probs[a] * v1[c];
      }
    }
    v0[id] = a0;
    v1[id] = a1;
  }
}

void TreeEvaluator::OthersReach(const BehavioralStrategy& opponent,
                                Player player) {
  const auto& nodes = game_->nodes();
  const Player opp = Opponent(player);
  others_reach_[0] = 1.0;
  for (int id = 1; id < game_->num_nodes(); ++id) {
    const EfgNode& node = nodes[id];
    const EfgNode& parent = nodes[node.parent];
    double r = others_reach_[node.parent];
    if (parent.player == Player::kChance) {
      r *= node.chance_prob;
    } else if (parent.player == opp) {
      r *= opponent.prob(parent.infoset, node.action);
    }
    others_reach_[id] = r;
  }
}

void TreeEvaluator::OwnReach(const BehavioralStrategy& strategy) {
  const auto& nodes = game_->nodes();
  const Player p = strategy.player();
  own_reach_[0] = 1.0;
  for (int id = 1; id < game_->num_nodes(); ++id) {
    const EfgNode& node = nodes[id];
    const EfgNode& parent = nodes[node.parent];
    double r = own_reach_[node.parent];
    if (parent.player == p) r *= strategy.prob(parent.infoset, node.action);
    own_reach_[id] = r;
  }
}

void TreeEvaluator::ActionValues(Player player, std::span<double> out) const {
  const auto& values = values_[PlayerIndex(player)];
  for (const Infoset& info : game_->infosets(player)) {
    double* dst = out.data() + info.offset;
    for (int a = 0; a < info.num_actions; ++a) dst[a] = 0.0;
    for (int m : info.nodes) {
      const EfgNode& node = game_->node(m);
      const double w = others_reach_[m];
      if (w == 0.0) continue;
      for (int a = 0; a < info.num_actions; ++a) {
        dst[a] += w * values[node.first_child + a];
      }
    }
  }
}

}  // namespace quantal
