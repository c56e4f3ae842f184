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

#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "quantal/evaluation.h"
#include "quantal/game_zoo.h"
#include "quantal/metrics.h"
#include "quantal/qse_optimizer.h"
#include "quantal/regret_solvers.h"
#include "quantal/responses.h"

namespace quantal {
namespace {

BehavioralStrategy Pure(int n, int a) {
  MixedStrategy x(n, 0.0);
  x[a] = 1.0;
  return BehavioralStrategy::Mixed(Player::kLeader, x);
}

TEST(Exploitability, PureMatchingPennies) {
  EXPECT_DOUBLE_EQ(Exploitability(zoo::MatchingPennies(), Pure(2, 0), 0.0), 1.0);
}

TEST(Exploitability, RejectsGeneralSum) {
  EXPECT_THROW(Exploitability(zoo::Coordination(), Pure(2, 0), 0.0), GameError);
}

TEST(Exploitability, NashStrategyWithinGap) {
  const NormalFormGame g = zoo::RandomNfg(8, 8, 5);
  SolverOptions o;
  o.iterations = 20000;
  const SolveReport nash = SolveNash(g, o);
  const GameValue v = ComputeGameValue(g);
  EXPECT_LE(v.lower, v.upper + 1e-12);
  EXPECT_LE(Exploitability(g, nash.strategy, v.value), nash.certificate + v.gap);
  EXPECT_GE(Gain(g, nash.strategy, QuantalModel::Logit(1.0), v.value),
            -(nash.certificate + v.gap));
}

TEST(Exploitability, GoofspielMatchesStandaloneBestResponse) {
  const ExtensiveFormGame g = zoo::Goofspiel(4);
  SolverOptions o;
  o.iterations = 1000;
  const SolveReport qne = SolveQne(g, QuantalModel::Logit(1.0), o);
  const double value = 0.0;  // symmetric game
  const double oracle =
      value + testing::BruteForceBestResponseValue(g, qne.strategy);
  EXPECT_NEAR(Exploitability(g, qne.strategy, value), oracle, 1e-9);
}

TEST(Gain, MatchingPenniesEquilibriumIsZero) {
  const NormalFormGame g = zoo::MatchingPennies();
  const BehavioralStrategy x = BehavioralStrategy::Uniform(g, Player::kLeader);
  for (double lambda : {0.5, 1.0, 10.0}) {
    EXPECT_NEAR(Gain(g, x, QuantalModel::Logit(lambda), 0.0), 0.0, 1e-15);
  }
}

TEST(Gain, BadQneEquilibriumBeatsQuantalEquilibrium) {
  const NormalFormGame g = zoo::BadQne();
  const QuantalModel m = QuantalModel::Logit(1.0);
  const GameValue v = ComputeGameValue(g);
  SolverOptions o;
  o.iterations = 100000;
  o.tolerance = 1e-7;
  const SolveReport nash = SolveNash(g, o);
  const SolveReport qne = SolveQne(g, m, o);
  const double gn = Gain(g, nash.strategy, m, v.value);
  const double gq = Gain(g, qne.strategy, m, v.value);
  EXPECT_NEAR(gn, 1.6438 - v.value, 1e-3);
  EXPECT_NEAR(gq, 1.6366 - v.value, 1e-3);
  EXPECT_GT(gn, gq);
}

TEST(Gain, Game1GradientAscentBeatsQuantalEquilibrium) {
  const NormalFormGame g = zoo::Game1();
  const QuantalModel m = QuantalModel::Logit(0.92);
  const GameValue v = ComputeGameValue(g);
  SolverOptions o;
  o.iterations = 100000;
  o.tolerance = 1e-7;
  const SolveReport qne = SolveQne(g, m, o);
  const SolveReport ga = SolveQseGaNfg(g, m, GaConfig());
  const double gq = Gain(g, qne.strategy, m, v.value);
  EXPECT_GE(Gain(g, ga.strategy, m, v.value), gq);
  EXPECT_GE(gq, 0.0);
}

TEST(Gain, BoundedByPayoffRange) {
  const QuantalModel m = QuantalModel::Logit(1.0);
  Rng rng(3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const NormalFormGame g = zoo::RandomNfg(5, 5, seed);
    const GameValue v = ComputeGameValue(g);
    const BehavioralStrategy x =
        BehavioralStrategy::Mixed(Player::kLeader, DirichletOnes(rng, 5));
    const Evaluation e = Evaluate(g, x, m, v.value);
    EXPECT_LE(*e.gain, g.max_payoff(Player::kLeader) - v.value);
    EXPECT_GE(*e.exploitability, -v.gap);
    // In zero-sum games the best response is the worst case for the leader.
    EXPECT_LE(e.eu_vs_br, e.eu_vs_qr + 1e-12);
  }
}

TEST(Evaluate, CoordinationGame) {
  const NormalFormGame g = zoo::Coordination();
  const Evaluation pure = Evaluate(g, Pure(2, 0), QuantalModel::Logit(1.0));
  EXPECT_EQ(pure.eu_vs_br, 1.0);
  EXPECT_FALSE(pure.gain.has_value());
  EXPECT_FALSE(pure.exploitability.has_value());
  const BehavioralStrategy uniform = BehavioralStrategy::Uniform(g, Player::kLeader);
  for (const QuantalModel& m :
       {QuantalModel::Logit(2.0), QuantalModel::OrderingBased()}) {
    EXPECT_NEAR(Evaluate(g, uniform, m).eu_vs_qr, 0.5, 1e-15);
  }
}

TEST(Evaluate, GrabTheDollarMatchesMatrixScan) {
  const NormalFormGame g = zoo::GamutStyle(zoo::GamutFamily::kGrabTheDollar, 6, 3);
  const QuantalModel m = QuantalModel::Logit(0.5);
  Rng rng(9);
  const MixedStrategy x = DirichletOnes(rng, 6);
  std::vector<double> uf(6, 0.0), ul(6, 0.0);
  for (int c = 0; c < 6; ++c) {
    for (int r = 0; r < 6; ++r) {
      uf[c] += x[r] * g.follower_payoff(r, c);
      ul[c] += x[r] * g.leader_payoff(r, c);
    }
  }
  double z = 0.0, qr = 0.0;
  for (int c = 0; c < 6; ++c) z += std::exp(0.5 * uf[c]);
  for (int c = 0; c < 6; ++c) qr += std::exp(0.5 * uf[c]) / z * ul[c];
  const double top = *std::max_element(uf.begin(), uf.end());
  double br = -1e300;
  for (int c = 0; c < 6; ++c) {
    if (uf[c] >= top - 1e-9) br = std::max(br, ul[c]);
  }
  const Evaluation e =
      Evaluate(g, BehavioralStrategy::Mixed(Player::kLeader, x), m);
  EXPECT_NEAR(e.eu_vs_qr, qr, 1e-12);
  EXPECT_NEAR(e.eu_vs_br, br, 1e-12);
}

TEST(Evaluate, ExtensiveMatchesNormalForm) {
  const NormalFormGame g = zoo::RandomNfg(4, 3, 2);
  const ExtensiveFormGame efg = zoo::NormalFormAsExtensive(g);
  const BehavioralStrategy x =
      BehavioralStrategy::Mixed(Player::kLeader, {0.1, 0.2, 0.3, 0.4});
  const QuantalModel m = QuantalModel::Logit(0.8);
  const Evaluation a = Evaluate(g, x, m, 0.25);
  const Evaluation b = Evaluate(efg, x, m, 0.25);
  EXPECT_NEAR(a.eu_vs_qr, b.eu_vs_qr, 1e-12);
  EXPECT_NEAR(a.eu_vs_br, b.eu_vs_br, 1e-12);
  EXPECT_NEAR(*a.gain, *b.gain, 1e-12);
  EXPECT_NEAR(*a.exploitability, *b.exploitability, 1e-12);
}

TEST(LambdaSweep, ZeroIsUniformOpponent) {
  const NormalFormGame g = zoo::RandomNfg(4, 5, 1);
  const BehavioralStrategy x =
      BehavioralStrategy::Mixed(Player::kLeader, {0.4, 0.3, 0.2, 0.1});
  const std::vector<SweepRow> rows =
      LambdaSweep(g, {{"x", x}}, {0.0, 1.0, 10.0}, std::nullopt);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[0].evaluation.eu_vs_qr,
              ExpectedUtility(g, x.flat(), MixedStrategy(5, 0.2))[0], 1e-15);
  EXPECT_EQ(rows[0].lambda, 0.0);
  EXPECT_EQ(LogitOrUniform(0.0).kind(), QuantalModel::Kind::kUniform);
}

TEST(LambdaSweep, HighLambdaCloseToBestResponse) {
  // Zero-sum, so the leader's loss equals the follower's softmax gap.
  const NormalFormGame g = zoo::RandomNfg(3, 4, 6);
  const BehavioralStrategy x =
      BehavioralStrategy::Mixed(Player::kLeader, {0.5, 0.3, 0.2});
  const std::vector<SweepRow> rows = LambdaSweep(g, {{"x", x}}, {100.0}, 0.0);
  const Evaluation& e = rows[0].evaluation;
  EXPECT_LE(std::abs(e.eu_vs_qr - e.eu_vs_br), SoftmaxGapBound(4, 100.0) + 1e-12);
}

TEST(LambdaSweep, MatchingPenniesEquilibriumGainIsFlat) {
  const NormalFormGame g = zoo::MatchingPennies();
  const BehavioralStrategy x = BehavioralStrategy::Uniform(g, Player::kLeader);
  for (const SweepRow& r :
       LambdaSweep(g, {{"ne", x}}, {0.0, 0.1, 1.0, 10.0, 100.0}, 0.0)) {
    EXPECT_NEAR(*r.evaluation.gain, 0.0, 1e-15);
  }
}

}  // namespace
}  // namespace quantal
