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

#ifndef QUANTAL_STRATEGY_H_
#define QUANTAL_STRATEGY_H_

#include <span>
#include <vector>

#include "quantal/common.h"
#include "quantal/extensive_form_game.h"
#include "quantal/normal_form_game.h"

namespace quantal {

// Per-infoset action distributions of one player. Probabilities are stored in
// one flat array using the game's infoset offsets. A mixed strategy of a
// normal-form game is the single-infoset case.
class BehavioralStrategy {
 public:
  BehavioralStrategy() = default;
  BehavioralStrategy(Player player, std::vector<int> offsets,
                     std::vector<int> sizes, std::vector<double> probs);

  static BehavioralStrategy Uniform(const ExtensiveFormGame& game, Player p);
  static BehavioralStrategy Uniform(const NormalFormGame& game, Player p);
  // Zero-filled storage with the game's shape.
  static BehavioralStrategy Zeros(const ExtensiveFormGame& game, Player p);
  static BehavioralStrategy Mixed(Player p, MixedStrategy probs);

  Player player() const { return player_; }
  int num_infosets() const { return static_cast<int>(sizes_.size()); }
  int num_actions(int infoset) const { return sizes_[infoset]; }
  int offset(int infoset) const { return offsets_[infoset]; }

  std::span<const double> at(int infoset) const {
    return {probs_.data() + offsets_[infoset],
            static_cast<std::size_t>(sizes_[infoset])};
  }
  std::span<double> at(int infoset) {
    return {probs_.data() + offsets_[infoset],
            static_cast<std::size_t>(sizes_[infoset])};
  }
  double prob(int infoset, int action) const {
    return probs_[offsets_[infoset] + action];
  }

  std::span<const double> flat() const { return probs_; }
  std::span<double> flat() { return probs_; }
  // The single distribution of a normal-form strategy.
  MixedStrategy mixed() const;

  // Throws DomainError unless the shape matches the game and every
  // distribution is nonnegative and sums to one within `tol`.
  void Validate(const ExtensiveFormGame& game, double tol = 1e-9) const;
  void Validate(const NormalFormGame& game, double tol = 1e-9) const;
  // Distribution checks without a game.
  void ValidateDistributions(double tol = 1e-9) const;

  bool operator==(const BehavioralStrategy&) const = default;

 private:
  Player player_ = Player::kLeader;
  std::vector<int> offsets_;
  std::vector<int> sizes_;
  std::vector<double> probs_;
};

struct StrategyProfile {
  BehavioralStrategy leader;
  BehavioralStrategy follower;

  const BehavioralStrategy& of(Player p) const {
    return p == Player::kLeader ? leader : follower;
  }
  BehavioralStrategy& of(Player p) {
    return p == Player::kLeader ? leader : follower;
  }
};

// Sequence-form representation: weights[0] is the empty sequence, the
// sequence of action a at infoset I is 1 + I.offset + a.
struct RealizationPlan {
  Player player = Player::kLeader;
  std::vector<double> weights;
};

RealizationPlan ToRealizationPlan(const ExtensiveFormGame& game,
                                  const BehavioralStrategy& strategy);

struct PlanConversion {
  BehavioralStrategy strategy;
  // Infosets whose parent sequence had zero weight; they fall back to the
  // uniform distribution.
  std::vector<int> uniform_fallback;
};

PlanConversion FromRealizationPlan(const ExtensiveFormGame& game,
                                   const RealizationPlan& plan);

// Checks r(empty) = 1, flow conservation and bounds. Returns the largest
// violation.
double RealizationPlanViolation(const ExtensiveFormGame& game,
                                const RealizationPlan& plan);

}  // namespace quantal

#endif  // QUANTAL_STRATEGY_H_
