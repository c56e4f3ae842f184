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

#include "quantal/responses.h"

#include <algorithm>
#include <cmath>

namespace quantal {

namespace {

int ArgMax(std::span<const double> v) {
  int best = 0;
  for (int a = 1; a < static_cast<int>(v.size()); ++a) {
    if (v[a] > v[best]) best = a;
  }
  return best;
}

bool NearlyEqual(double a, double b) {
  return std::abs(a - b) <= 1e-10 * (1.0 + std::max(std::abs(a), std::abs(b)));
}

// Among actions tied (within tolerance) on `primary`, the one with the
// largest `secondary`; lowest index on further ties.
int ArgMaxWithTieBreak(std::span<const double> primary,
                       std::span<const double> secondary) {
  const int top = ArgMax(primary);
  int best = top;
  for (int a = 0; a < static_cast<int>(primary.size()); ++a) {
    if (NearlyEqual(primary[a], primary[top]) && secondary[a] > secondary[best]) {
      best = a;
    }
  }
  return best;
}

}  // namespace

MixedStrategy NfgQuantalResponse(const NormalFormGame& game,
                                 std::span<const double> leader,
                                 const QuantalModel& model) {
  const std::vector<double> u =
      FollowerActionValues(game, Player::kFollower, leader);
  return model.Respond(u);
}

BehavioralStrategy Clqr(const ExtensiveFormGame& game,
                        const BehavioralStrategy& leader,
                        const QuantalModel& model) {
  if (leader.player() != Player::kLeader) {
    throw DomainError("quantal response is computed against a leader strategy");
  }
  leader.Validate(game);
  ResponseEngine engine(game);
  return engine.Respond(leader, ResponseEngine::Rule::kQuantal, &model);
}

BestResponse ComputeBestResponse(const NormalFormGame& game,
                                 const BehavioralStrategy& opponent) {
  opponent.Validate(game);
  const Player responder = Opponent(opponent.player());
  const std::vector<double> values =
      responder == Player::kLeader
          ? LeaderActionValues(game, responder, opponent.flat())
          : FollowerActionValues(game, responder, opponent.flat());
  const int best = ArgMax(values);
  MixedStrategy pure(values.size(), 0.0);
  pure[best] = 1.0;
  return {BehavioralStrategy::Mixed(responder, std::move(pure)), values[best]};
}

BestResponse ComputeBestResponse(const ExtensiveFormGame& game,
                                 const BehavioralStrategy& opponent) {
  opponent.Validate(game);
  ResponseEngine engine(game);
  const BehavioralStrategy& br =
      engine.Respond(opponent, ResponseEngine::Rule::kBest);
  return {br, engine.values()[PlayerIndex(br.player())]};
}

FavoringBestResponse LeaderFavoringBestResponse(
    const NormalFormGame& game, const BehavioralStrategy& leader) {
  leader.Validate(game);
  if (leader.player() != Player::kLeader) {
    throw DomainError("expected a leader strategy");
  }
  const std::vector<double> follower_values =
      FollowerActionValues(game, Player::kFollower, leader.flat());
  const std::vector<double> leader_values =
      FollowerActionValues(game, Player::kLeader, leader.flat());
  const int best = ArgMaxWithTieBreak(follower_values, leader_values);
  MixedStrategy pure(follower_values.size(), 0.0);
  pure[best] = 1.0;
  return {BehavioralStrategy::Mixed(Player::kFollower, std::move(pure)),
          follower_values[best], leader_values[best]};
}

FavoringBestResponse LeaderFavoringBestResponse(
    const ExtensiveFormGame& game, const BehavioralStrategy& leader) {
  leader.Validate(game);
  if (leader.player() != Player::kLeader) {
    throw DomainError("expected a leader strategy");
  }
  ResponseEngine engine(game);
  const BehavioralStrategy& br =
      engine.Respond(leader, ResponseEngine::Rule::kBestFavoringOpponent);
  const auto v = engine.values();
  return {br, v[PlayerIndex(Player::kFollower)],
          v[PlayerIndex(Player::kLeader)]};
}

double EpsilonBrCertificate(const NormalFormGame& game,
                            const StrategyProfile& profile, Player player) {
  const double current = ExpectedUtility(game, profile)[PlayerIndex(player)];
  const BestResponse br = ComputeBestResponse(game, profile.of(Opponent(player)));
  return br.value - current;
}

double EpsilonBrCertificate(const ExtensiveFormGame& game,
                            const StrategyProfile& profile, Player player) {
  const double current = ExpectedUtility(game, profile)[PlayerIndex(player)];
  const BestResponse br = ComputeBestResponse(game, profile.of(Opponent(player)));
  return br.value - current;
}

ResponseEngine::ResponseEngine(const ExtensiveFormGame& game)
    : game_(&game),
      values_{std::vector<double>(game.num_nodes()),
              std::vector<double>(game.num_nodes())},
      others_reach_(game.num_nodes(), 1.0) {}

const BehavioralStrategy& ResponseEngine::Respond(
    const BehavioralStrategy& fixed, Rule rule, const QuantalModel* model) {
  const ExtensiveFormGame& game = *game_;
  const Player fixed_player = fixed.player();
  const Player responder = Opponent(fixed_player);
  const int r = PlayerIndex(responder);
  if (rule == Rule::kQuantal && model == nullptr) {
    throw GameError("quantal response requires a model");
  }
  if (response_.player() != responder ||
      response_.num_infosets() != game.num_infosets(responder)) {
    response_ = BehavioralStrategy::Zeros(game, responder);
  }
  cfv_.assign(game.num_infoset_actions(responder), 0.0);
  other_cfv_.assign(game.num_infoset_actions(responder), 0.0);

  const auto& nodes = game.nodes();
  others_reach_[0] = 1.0;
  for (int id = 1; id < game.num_nodes(); ++id) {
    const EfgNode& node = nodes[id];
    const EfgNode& parent = nodes[node.parent];
    double w = others_reach_[node.parent];
    if (parent.player == Player::kChance) {
      w *= node.chance_prob;
    } else if (parent.player == fixed_player) {
      w *= fixed.prob(parent.infoset, node.action);
    }
    others_reach_[id] = w;
  }

  double* v_resp = values_[r].data();
  double* v_fixed = values_[1 - r].data();
  for (const SweepStep& step : game.response_sweep(responder)) {
    if (step.kind == SweepStep::Kind::kNode) {
      const EfgNode& node = nodes[step.index];
      if (node.is_terminal()) {
        v_resp[step.index] = node.utility[r];
        v_fixed[step.index] = node.utility[1 - r];
        continue;
      }
      const double* probs = nullptr;
      if (node.player == fixed_player) {
        probs = fixed.flat().data() + fixed.offset(node.infoset);
      } else if (node.player == responder) {
        probs = response_.flat().data() + response_.offset(node.infoset);
      }
      double a_resp = 0.0, a_fixed = 0.0;
      for (int a = 0; a < node.num_children; ++a) {
        const int c = node.first_child + a;
        const double w = probs ? probs[a] : nodes[c].chance_prob;
        a_resp += w * v_resp[c];
        a_fixed += w * v_fixed[c];
      }
      v_resp[step.index] = a_resp;
      v_fixed[step.index] = a_fixed;
    } else {
      const Infoset& info = game.infoset(responder, step.index);
      const int n = info.num_actions;
      std::span<double> util(cfv_.data() + info.offset, n);
      std::span<double> other(other_cfv_.data() + info.offset, n);
      for (int m : info.nodes) {
        const double w = others_reach_[m];
        const int first = nodes[m].first_child;
        for (int a = 0; a < n; ++a) {
          util[a] += w * v_resp[first + a];
          other[a] += w * v_fixed[first + a];
        }
      }
      std::span<double> dist = response_.at(step.index);
      switch (rule) {
        case Rule::kQuantal:
          model->Respond(util, dist);
          break;
        case Rule::kBest: {
          std::fill(dist.begin(), dist.end(), 0.0);
          dist[ArgMax(util)] = 1.0;
          break;
        }
        case Rule::kBestFavoringOpponent: {
          std::fill(dist.begin(), dist.end(), 0.0);
          dist[ArgMaxWithTieBreak(util, other)] = 1.0;
          break;
        }
      }
    }
  }
  return response_;
}

}  // namespace quantal
