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

#include "quantal/strategy.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace quantal {

namespace {

void Shape(const ExtensiveFormGame& game, Player p, std::vector<int>* offsets,
           std::vector<int>* sizes) {
  offsets->clear();
  sizes->clear();
  for (const Infoset& info : game.infosets(p)) {
    offsets->push_back(info.offset);
    sizes->push_back(info.num_actions);
  }
}

}  // namespace

BehavioralStrategy::BehavioralStrategy(Player player, std::vector<int> offsets,
                                       std::vector<int> sizes,
                                       std::vector<double> probs)
    : player_(player),
      offsets_(std::move(offsets)),
      sizes_(std::move(sizes)),
      probs_(std::move(probs)) {
  if (offsets_.size() != sizes_.size()) {
    throw DomainError("strategy offsets and sizes differ in length");
  }
  std::size_t total = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (offsets_[i] != static_cast<int>(total) || sizes_[i] < 1) {
      throw DomainError("strategy layout is not contiguous");
    }
    total += sizes_[i];
  }
  if (probs_.size() != total) {
    throw DomainError("strategy has " + std::to_string(probs_.size()) +
                      " probabilities, expected " + std::to_string(total));
  }
}

BehavioralStrategy BehavioralStrategy::Zeros(const ExtensiveFormGame& game,
                                             Player p) {
  BehavioralStrategy s;
  s.player_ = p;
  Shape(game, p, &s.offsets_, &s.sizes_);
  s.probs_.assign(game.num_infoset_actions(p), 0.0);
  return s;
}

BehavioralStrategy BehavioralStrategy::Uniform(const ExtensiveFormGame& game,
                                               Player p) {
  BehavioralStrategy s = Zeros(game, p);
  for (int i = 0; i < s.num_infosets(); ++i) {
    auto d = s.at(i);
    std::fill(d.begin(), d.end(), 1.0 / d.size());
  }
  return s;
}

BehavioralStrategy BehavioralStrategy::Uniform(const NormalFormGame& game,
                                               Player p) {
  const int n = game.num_actions(p);
  return Mixed(p, MixedStrategy(n, 1.0 / n));
}

BehavioralStrategy BehavioralStrategy::Mixed(Player p, MixedStrategy probs) {
  const int n = static_cast<int>(probs.size());
  return BehavioralStrategy(p, {0}, {n}, std::move(probs));
}

MixedStrategy BehavioralStrategy::mixed() const {
  if (sizes_.size() != 1) {
    throw DomainError("strategy is not a single mixed strategy");
  }
  return probs_;
}

void BehavioralStrategy::ValidateDistributions(double tol) const {
  for (int i = 0; i < num_infosets(); ++i) {
    double sum = 0.0;
    for (double p : at(i)) {
      if (!(p >= -tol)) {
        throw DomainError("negative probability at infoset " +
                          std::to_string(i));
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > tol) {
      throw DomainError("distribution at infoset " + std::to_string(i) +
                        " sums to " + std::to_string(sum));
    }
  }
}

void BehavioralStrategy::Validate(const ExtensiveFormGame& game,
                                  double tol) const {
  if (num_infosets() != game.num_infosets(player_)) {
    throw DomainError(std::string("strategy covers ") +
                      std::to_string(num_infosets()) + " infosets but the " +
                      PlayerName(player_) + " has " +
                      std::to_string(game.num_infosets(player_)));
  }
  for (int i = 0; i < num_infosets(); ++i) {
    if (sizes_[i] != game.infoset(player_, i).num_actions) {
      throw DomainError("action count mismatch at infoset " +
                        std::to_string(i));
    }
  }
  ValidateDistributions(tol);
}

void BehavioralStrategy::Validate(const NormalFormGame& game,
                                  double tol) const {
  if (num_infosets() != 1 || sizes_[0] != game.num_actions(player_)) {
    throw DomainError(std::string("strategy does not match the ") +
                      PlayerName(player_) + "'s action set");
  }
  ValidateDistributions(tol);
}

RealizationPlan ToRealizationPlan(const ExtensiveFormGame& game,
                                  const BehavioralStrategy& strategy) {
  strategy.Validate(game);
  const Player p = strategy.player();
  RealizationPlan plan;
  plan.player = p;
  plan.weights.assign(game.num_sequences(p), 0.0);
  plan.weights[0] = 1.0;
  // Infosets are numbered in breadth-first order of first appearance, so a
  // parent sequence is always assigned before it is read.
  for (int i = 0; i < game.num_infosets(p); ++i) {
    const Infoset& info = game.infoset(p, i);
    const double parent = plan.weights[info.parent_sequence];
    for (int a = 0; a < info.num_actions; ++a) {
      plan.weights[1 + info.offset + a] = parent * strategy.prob(i, a);
    }
  }
  return plan;
}

PlanConversion FromRealizationPlan(const ExtensiveFormGame& game,
                                   const RealizationPlan& plan) {
  const Player p = plan.player;
  if (static_cast<int>(plan.weights.size()) != game.num_sequences(p)) {
    throw DomainError("realization plan has the wrong number of sequences");
  }
  PlanConversion out{BehavioralStrategy::Zeros(game, p), {}};
  for (int i = 0; i < game.num_infosets(p); ++i) {
    const Infoset& info = game.infoset(p, i);
    const double parent = plan.weights[info.parent_sequence];
    auto dist = out.strategy.at(i);
    if (parent <= 0.0) {
      std::fill(dist.begin(), dist.end(), 1.0 / info.num_actions);
      out.uniform_fallback.push_back(i);
      continue;
    }
    for (int a = 0; a < info.num_actions; ++a) {
      dist[a] = plan.weights[1 + info.offset + a] / parent;
    }
  }
  return out;
}

double RealizationPlanViolation(const ExtensiveFormGame& game,
                                const RealizationPlan& plan) {
  const Player p = plan.player;
  double worst = std::abs(plan.weights[0] - 1.0);
  for (double w : plan.weights) {
    worst = std::max({worst, -w, w - 1.0});
  }
  for (const Infoset& info : game.infosets(p)) {
    double sum = 0.0;
    for (int a = 0; a < info.num_actions; ++a) {
      sum += plan.weights[1 + info.offset + a];
    }
    worst = std::max(worst, std::abs(sum - plan.weights[info.parent_sequence]));
  }
  return worst;
}

}  // namespace quantal
