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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "quantal/evaluation.h"
#include "quantal/extensive_form_game.h"
#include "quantal/game_zoo.h"
#include "quantal/kernels.h"
#include "quantal/normal_form_game.h"
#include "quantal/random.h"
#include "quantal/responses.h"
#include "quantal/strategy.h"

namespace quantal {
namespace {

using testing::RandomStrategy;

// Leader chooses L/R, then chance flips a fair coin, then the follower picks
// without seeing the leader's move.
ExtensiveFormGame SmallChanceGame() {
  ExtensiveFormGameBuilder b;
  const int root = b.AddDecision(-1, 0, Player::kLeader, "L", 2);
  for (int a = 0; a < 2; ++a) {
    const int c = b.AddChance(root, a, {0.5, 0.5});
    for (int o = 0; o < 2; ++o) {
      const int f = b.AddDecision(c, o, Player::kFollower,
                                  "F" + std::to_string(o), 2);
      for (int x = 0; x < 2; ++x) b.AddTerminal(f, x, a + 2 * o - x);
    }
  }
  return b.Build();
}

TEST(NormalFormGame, ZeroSumNegatesExactly) {
  const NormalFormGame g = zoo::BadQne();
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      EXPECT_EQ(g.follower_payoff(r, c), -g.leader_payoff(r, c));
    }
  }
}

TEST(NormalFormGame, RejectsBadShapes) {
  EXPECT_THROW(NormalFormGame(2, 2, {1, 2, 3}, {1, 2, 3, 4}), GameError);
  EXPECT_THROW(NormalFormGame::ZeroSum(0, 2, {}), GameError);
  EXPECT_THROW(NormalFormGame::ZeroSum({{1, 2}, {3}}), GameError);
}

TEST(ExpectedUtility, BadQneNashAgainstLogitResponse) {
  const NormalFormGame g = zoo::BadQne();
  const MixedStrategy leader = {1.0 / 6, 5.0 / 6};
  const MixedStrategy follower =
      NfgQuantalResponse(g, leader, QuantalModel::Logit(1.0));
  EXPECT_NEAR(ExpectedUtility(g, leader, follower)[0], 1.6438, 1e-3);
}

TEST(ExpectedUtility, ZeroMatrixIsZero) {
  const NormalFormGame g = NormalFormGame::ZeroSum(3, 4, std::vector<double>(12));
  const auto eu = ExpectedUtility(g, MixedStrategy(3, 1.0 / 3),
                                  MixedStrategy(4, 0.25));
  EXPECT_EQ(eu[0], 0.0);
  EXPECT_EQ(eu[1], 0.0);
}

TEST(ExpectedUtility, OneCardPokerMatchesTerminalEnumeration) {
  const ExtensiveFormGame g = zoo::OneCardPoker(4);
  const StrategyProfile uniform{
      BehavioralStrategy::Uniform(g, Player::kLeader),
      BehavioralStrategy::Uniform(g, Player::kFollower)};
  const auto eu = ExpectedUtility(g, uniform);
  const auto oracle = testing::EnumerateUtility(g, uniform.leader, uniform.follower);
  EXPECT_NEAR(eu[0], oracle[0], 1e-12);
  EXPECT_NEAR(eu[1], oracle[1], 1e-12);
}

TEST(ExpectedUtility, MismatchedStrategyIsDomainError) {
  const ExtensiveFormGame a = zoo::OneCardPoker(3);
  const ExtensiveFormGame b = zoo::OneCardPoker(4);
  const StrategyProfile wrong{BehavioralStrategy::Uniform(b, Player::kLeader),
                              BehavioralStrategy::Uniform(a, Player::kFollower)};
  EXPECT_THROW(ExpectedUtility(a, wrong), DomainError);
  EXPECT_THROW(ExpectedUtility(zoo::BadQne(), MixedStrategy{1.0},
                               MixedStrategy{0.2, 0.3, 0.5}),
               DomainError);
}

TEST(Reach, RootAndChanceChild) {
  const ExtensiveFormGame g = SmallChanceGame();
  const StrategyProfile uniform{
      BehavioralStrategy::Uniform(g, Player::kLeader),
      BehavioralStrategy::Uniform(g, Player::kFollower)};
  const ReachProbabilities r = ComputeReach(g, uniform);
  EXPECT_EQ(r.own(Player::kLeader, 0), 1.0);
  EXPECT_EQ(r.others(Player::kLeader, 0), 1.0);
  // Chance children of the leader's first action.
  const int chance = g.node(0).child(0);
  for (int o = 0; o < 2; ++o) {
    const int h = g.node(chance).child(o);
    EXPECT_EQ(r.chance[h], 0.5);
    EXPECT_EQ(r.others(Player::kLeader, h), 0.5);
    EXPECT_EQ(r.others(Player::kFollower, h), 0.25);
  }
}

TEST(Reach, MatchesPathProductOnRandomTree) {
  const ExtensiveFormGame g = zoo::RandomEfg(3, 2, 1, 11);
  Rng rng(5);
  const StrategyProfile s{RandomStrategy(g, Player::kLeader, rng),
                          RandomStrategy(g, Player::kFollower, rng)};
  const ReachProbabilities r = ComputeReach(g, s);
  for (int h = 0; h < g.num_nodes(); ++h) {
    const std::vector<int> path = testing::PathTo(g, h);
    const std::size_t end = path.size() - 1;
    EXPECT_NEAR(r.leader[h],
                testing::PathProduct(g, path, 0, end, s.leader, s.follower,
                                     {Player::kLeader}),
                1e-15);
    EXPECT_NEAR(r.follower[h],
                testing::PathProduct(g, path, 0, end, s.leader, s.follower,
                                     {Player::kFollower}),
                1e-15);
    EXPECT_NEAR(r.total(h),
                testing::PathProduct(g, path, 0, end, s.leader, s.follower,
                                     {Player::kLeader, Player::kFollower,
                                      Player::kChance}),
                1e-15);
  }
}

TEST(CounterfactualValues, SingleDecisionIsChanceWeightedUtility) {
  ExtensiveFormGameBuilder b;
  const int c = b.AddChance(-1, 0, {0.25, 0.75});
  for (int o = 0; o < 2; ++o) {
    const int d = b.AddDecision(c, o, Player::kLeader, "only", 2);
    b.AddTerminal(d, 0, 4.0 * (o + 1));
    b.AddTerminal(d, 1, -2.0);
  }
  const ExtensiveFormGame g = b.Build();
  const StrategyProfile s{BehavioralStrategy::Uniform(g, Player::kLeader),
                          BehavioralStrategy::Uniform(g, Player::kFollower)};
  const CounterfactualValues v =
      ComputeCounterfactualValues(g, s, Player::kLeader);
  EXPECT_DOUBLE_EQ(v.action_value[0], 0.25 * 4 + 0.75 * 8);
  EXPECT_DOUBLE_EQ(v.action_value[1], -2.0);
  EXPECT_DOUBLE_EQ(v.infoset_value[0], 0.5 * 7 + 0.5 * -2);
}

TEST(CounterfactualValues, MatchingPenniesUniformIsZero) {
  const ExtensiveFormGame g =
      zoo::NormalFormAsExtensive(zoo::MatchingPennies());
  const StrategyProfile s{BehavioralStrategy::Uniform(g, Player::kLeader),
                          BehavioralStrategy::Uniform(g, Player::kFollower)};
  for (Player p : {Player::kLeader, Player::kFollower}) {
    for (double v : ComputeCounterfactualValues(g, s, p).action_value) {
      EXPECT_EQ(v, 0.0);
    }
  }
}

TEST(CounterfactualValues, MatchDoubleSumOracle) {
  const zoo::EfgSetParams set2 = zoo::RandomEfgSet(2);
  const ExtensiveFormGame g = zoo::RandomEfg(set2.b, set2.o, set2.l, 3);
  Rng rng(17);
  const StrategyProfile s{RandomStrategy(g, Player::kLeader, rng),
                          RandomStrategy(g, Player::kFollower, rng)};
  for (Player p : {Player::kLeader, Player::kFollower}) {
    const CounterfactualValues v = ComputeCounterfactualValues(g, s, p);
    const std::vector<double> oracle =
        testing::BruteForceCfv(g, s.leader, s.follower, p);
    ASSERT_EQ(v.action_value.size(), oracle.size());
    for (std::size_t k = 0; k < oracle.size(); ++k) {
      EXPECT_NEAR(v.action_value[k], oracle[k], 1e-12);
    }
  }
}

TEST(CounterfactualValues, FirstInfosetsReconstructRootUtility) {
  const zoo::EfgSetParams set2 = zoo::RandomEfgSet(2);
  const ExtensiveFormGame g = zoo::RandomEfg(set2.b, set2.o, set2.l, 8);
  Rng rng(3);
  const StrategyProfile s{RandomStrategy(g, Player::kLeader, rng),
                          RandomStrategy(g, Player::kFollower, rng)};
  const auto eu = ExpectedUtility(g, s);
  // Both players act on every path, so the values of the infosets without a
  // preceding own action add up to the expected utility.
  for (Player p : {Player::kLeader, Player::kFollower}) {
    const CounterfactualValues v = ComputeCounterfactualValues(g, s, p);
    double total = 0.0;
    for (int i = 0; i < g.num_infosets(p); ++i) {
      if (g.infoset(p, i).sequence_depth == 0) total += v.infoset_value[i];
    }
    EXPECT_NEAR(total, eu[PlayerIndex(p)], 1e-9);
  }
}

TEST(CounterfactualValues, InvariantToOwnStrategyAbove) {
  const zoo::EfgSetParams set2 = zoo::RandomEfgSet(2);
  const ExtensiveFormGame g = zoo::RandomEfg(set2.b, set2.o, set2.l, 21);
  Rng rng(9);
  const StrategyProfile s{RandomStrategy(g, Player::kLeader, rng),
                          RandomStrategy(g, Player::kFollower, rng)};
  for (Player p : {Player::kLeader, Player::kFollower}) {
    const CounterfactualValues base = ComputeCounterfactualValues(g, s, p);
    StrategyProfile t = s;
    const BehavioralStrategy noise = RandomStrategy(g, p, rng);
    int max_depth = 0;
    for (const Infoset& info : g.infosets(p)) {
      max_depth = std::max(max_depth, info.sequence_depth);
    }
    ASSERT_GT(max_depth, 0);
    for (int i = 0; i < g.num_infosets(p); ++i) {
      if (g.infoset(p, i).sequence_depth < max_depth) {
        for (int a = 0; a < t.of(p).num_actions(i); ++a) {
          t.of(p).at(i)[a] = noise.prob(i, a);
        }
      }
    }
    const CounterfactualValues moved = ComputeCounterfactualValues(g, t, p);
    for (int i = 0; i < g.num_infosets(p); ++i) {
      const Infoset& info = g.infoset(p, i);
      if (info.sequence_depth < max_depth) continue;
      for (int a = 0; a < info.num_actions; ++a) {
        EXPECT_NEAR(moved.action_value[info.offset + a],
                    base.action_value[info.offset + a], 1e-12);
      }
    }
  }
}

TEST(Reach, InfosetReachDominatesMembers) {
  const ExtensiveFormGame g = zoo::OneCardPoker(5);
  Rng rng(1);
  const StrategyProfile s{RandomStrategy(g, Player::kLeader, rng),
                          RandomStrategy(g, Player::kFollower, rng)};
  const ReachProbabilities r = ComputeReach(g, s);
  for (Player p : {Player::kLeader, Player::kFollower}) {
    for (const Infoset& info : g.infosets(p)) {
      double sum = 0.0;
      for (int h : info.nodes) sum += r.total(h);
      for (int h : info.nodes) {
        EXPECT_GE(r.total(h), 0.0);
        EXPECT_GE(sum, r.total(h));
      }
    }
  }
}

TEST(ExpectedUtility, NormalFormIsBilinear) {
  const NormalFormGame g = zoo::RandomNfg(5, 6, 2);
  Rng rng(4);
  const MixedStrategy s1 = DirichletOnes(rng, 5);
  const MixedStrategy s2 = DirichletOnes(rng, 5);
  const MixedStrategy t = DirichletOnes(rng, 6);
  const double alpha = 0.37;
  MixedStrategy mix(5);
  for (int i = 0; i < 5; ++i) mix[i] = alpha * s1[i] + (1 - alpha) * s2[i];
  EXPECT_NEAR(ExpectedUtility(g, mix, t)[0],
              alpha * ExpectedUtility(g, s1, t)[0] +
                  (1 - alpha) * ExpectedUtility(g, s2, t)[0],
              1e-12);
}

TEST(RealizationPlan, SingleInfoset) {
  const ExtensiveFormGame g =
      zoo::NormalFormAsExtensive(zoo::MatchingPennies());
  const BehavioralStrategy s = BehavioralStrategy::Mixed(Player::kLeader, {0.3, 0.7});
  const RealizationPlan plan = ToRealizationPlan(g, s);
  ASSERT_EQ(plan.weights.size(), 3u);
  EXPECT_EQ(plan.weights[0], 1.0);
  EXPECT_DOUBLE_EQ(plan.weights[1], 0.3);
  EXPECT_DOUBLE_EQ(plan.weights[2], 0.7);
}

TEST(RealizationPlan, ZeroWeightFallsBackToUniform) {
  const ExtensiveFormGame g = zoo::RandomEfg(2, 2, 2, 0);
  BehavioralStrategy s = BehavioralStrategy::Uniform(g, Player::kLeader);
  s.at(0)[0] = 1.0;
  s.at(0)[1] = 0.0;
  const PlanConversion back = FromRealizationPlan(g, ToRealizationPlan(g, s));
  ASSERT_FALSE(back.uniform_fallback.empty());
  for (int i : back.uniform_fallback) {
    for (double p : back.strategy.at(i)) {
      EXPECT_DOUBLE_EQ(p, 1.0 / back.strategy.num_actions(i));
    }
  }
}

TEST(RealizationPlan, RoundTripAndFlowConservation) {
  const zoo::EfgSetParams set2 = zoo::RandomEfgSet(2);
  const ExtensiveFormGame g = zoo::RandomEfg(set2.b, set2.o, set2.l, 1);
  Rng rng(2);
  for (Player p : {Player::kLeader, Player::kFollower}) {
    const BehavioralStrategy s = RandomStrategy(g, p, rng);
    const RealizationPlan plan = ToRealizationPlan(g, s);
    EXPECT_LT(RealizationPlanViolation(g, plan), 1e-12);
    const PlanConversion back = FromRealizationPlan(g, plan);
    EXPECT_TRUE(back.uniform_fallback.empty());
    double dev = 0.0;
    for (std::size_t k = 0; k < s.flat().size(); ++k) {
      dev = std::max(dev, std::abs(s.flat()[k] - back.strategy.flat()[k]));
    }
    EXPECT_LT(dev, 1e-12);
  }
}

TEST(ExtensiveFormGame, RejectsImperfectRecall) {
  // The leader forgets her first action.
  ExtensiveFormGameBuilder b;
  const int root = b.AddDecision(-1, 0, Player::kLeader, "first", 2);
  for (int a = 0; a < 2; ++a) {
    const int d = b.AddDecision(root, a, Player::kLeader, "second", 2);
    b.AddTerminal(d, 0, 1.0);
    b.AddTerminal(d, 1, 0.0);
  }
  EXPECT_THROW(b.Build(), GameError);
}

TEST(ExtensiveFormGame, RejectsUnnormalizedChance) {
  ExtensiveFormGameBuilder b;
  EXPECT_THROW(
      {
        const int c = b.AddChance(-1, 0, {0.5, 0.6});
        b.AddTerminal(c, 0, 1.0);
        b.AddTerminal(c, 1, 0.0);
        b.Build();
      },
      GameError);
}

TEST(ExtensiveFormGame, RejectsMismatchedInfosetActions) {
  ExtensiveFormGameBuilder b;
  const int c = b.AddChance(-1, 0, {0.5, 0.5});
  for (int o = 0; o < 2; ++o) {
    const int d = b.AddDecision(c, o, Player::kLeader, "x", 2 + o);
    for (int a = 0; a < 2 + o; ++a) b.AddTerminal(d, a, a);
  }
  EXPECT_THROW(b.Build(), GameError);
}

TEST(BehavioralStrategy, ValidateChecksDistributions) {
  const ExtensiveFormGame g = zoo::OneCardPoker(3);
  BehavioralStrategy s = BehavioralStrategy::Uniform(g, Player::kLeader);
  EXPECT_NO_THROW(s.Validate(g));
  s.at(0)[0] += 1e-6;
  EXPECT_THROW(s.Validate(g), DomainError);
}

TEST(Kernels, ParallelMatchesSerialBitwise) {
  Rng rng(5);
  for (const auto& [rows, cols] :
       std::vector<std::pair<int, int>>{{1, 1}, {3, 7}, {300, 257}}) {
    std::vector<double> m(static_cast<std::size_t>(rows) * cols);
    for (double& x : m) x = UnitDraw(rng) - 0.5;
    std::vector<double> v(cols), w(rows);
    for (double& x : v) x = UnitDraw(rng);
    for (double& x : w) x = UnitDraw(rng);
    std::vector<double> a(rows), b(rows), c(cols), d(cols);
    kernels::serial::MatVec(m, rows, cols, v, a);
    kernels::parallel::MatVec(m, rows, cols, v, b);
    EXPECT_EQ(a, b);
    kernels::serial::VecMat(w, m, rows, cols, c);
    kernels::parallel::VecMat(w, m, rows, cols, d);
    EXPECT_EQ(c, d);
    // Naive double loop as the reference.
    for (int r = 0; r < rows; ++r) {
      double s = 0.0;
      for (int k = 0; k < cols; ++k) s += m[r * cols + k] * v[k];
      EXPECT_NEAR(a[r], s, 1e-12);
    }
    for (int k = 0; k < cols; ++k) {
      double s = 0.0;
      for (int r = 0; r < rows; ++r) s += w[r] * m[r * cols + k];
      EXPECT_NEAR(c[k], s, 1e-12);
    }
  }
}

}  // namespace
}  // namespace quantal
