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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include "gtest/gtest.h"
#include "oracles.h"
#include "quantal/evaluation.h"
#include "quantal/game_zoo.h"
#include "quantal/serialization.h"

namespace quantal {
namespace {

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Serialization, NormalFormRoundTrip) {
  for (const NormalFormGame& g :
       {zoo::RandomNfg(3, 4, 2), zoo::RandomNfg(2, 5, 1, false), zoo::Game2()}) {
    const Json j = ToJson(g);
    const NormalFormGame back = NormalFormGameFromJson(j);
    EXPECT_EQ(back.rows(), g.rows());
    EXPECT_EQ(back.cols(), g.cols());
    EXPECT_EQ(back.zero_sum(), g.zero_sum());
    for (int r = 0; r < g.rows(); ++r) {
      for (int c = 0; c < g.cols(); ++c) {
        EXPECT_EQ(back.leader_payoff(r, c), g.leader_payoff(r, c));
        EXPECT_EQ(back.follower_payoff(r, c), g.follower_payoff(r, c));
      }
    }
    EXPECT_EQ(ToJson(back).dump(), j.dump());
    EXPECT_TRUE(std::holds_alternative<NormalFormGame>(GameFromJson(j)));
  }
}

TEST(Serialization, ExtensiveFormRoundTrip) {
  Rng rng(4);
  for (const ExtensiveFormGame& g :
       {zoo::OneCardPoker(3), zoo::Goofspiel(3),
        zoo::PartitionReductionGame({1, 2}, zoo::ReductionVariant::kGeneralSum)}) {
    const Json j = ToJson(g);
    const AnyGame any = GameFromJson(j);
    ASSERT_TRUE(std::holds_alternative<ExtensiveFormGame>(any));
    const ExtensiveFormGame& back = std::get<ExtensiveFormGame>(any);
    EXPECT_EQ(back.num_nodes(), g.num_nodes());
    EXPECT_EQ(back.num_infosets(Player::kLeader), g.num_infosets(Player::kLeader));
    EXPECT_EQ(back.num_infosets(Player::kFollower),
              g.num_infosets(Player::kFollower));
    EXPECT_EQ(back.zero_sum(), g.zero_sum());
    EXPECT_EQ(ToJson(back).dump(), j.dump());
    const StrategyProfile prof{testing::RandomStrategy(g, Player::kLeader, rng),
                               testing::RandomStrategy(g, Player::kFollower, rng)};
    const auto a = ExpectedUtility(g, prof);
    const auto b = ExpectedUtility(back, prof);
    EXPECT_EQ(a[0], b[0]);
    EXPECT_EQ(a[1], b[1]);
  }
}

TEST(Serialization, ModelRoundTrip) {
  const std::vector<double> u = {0.3, -1.0, 2.5};
  for (const QuantalModel& m :
       {QuantalModel::Logit(2.5), QuantalModel::OrderingBased(),
        QuantalModel::OrderingBased({0.7, 0.2, 0.1}), QuantalModel::Uniform()}) {
    const QuantalModel back = ModelFromJson(ToJson(m));
    EXPECT_EQ(back.kind(), m.kind());
    EXPECT_EQ(back.Respond(u), m.Respond(u));
  }
  EXPECT_EQ(ModelFromJson(Json::parse(R"({"kind":"logit","lambda":0.5})"))
                .Respond(u),
            QuantalModel::Logit(0.5).Respond(u));
}

TEST(Serialization, StrategyRoundTrip) {
  Rng rng(8);
  const ExtensiveFormGame g = zoo::OneCardPoker(3);
  const BehavioralStrategy s = testing::RandomStrategy(g, Player::kFollower, rng);
  const BehavioralStrategy back = StrategyFromJson(ToJson(s));
  EXPECT_EQ(back, s);
  EXPECT_EQ(back.player(), Player::kFollower);
}

TEST(Serialization, FilesAreByteStable) {
  const auto dir = std::filesystem::temp_directory_path() / "quantal_ser_test";
  std::filesystem::create_directories(dir);
  const std::string a = (dir / "a.json").string(), b = (dir / "b.json").string();
  WriteJsonFile(a, ToJson(zoo::Goofspiel(2)));
  WriteJsonFile(b, ToJson(std::get<ExtensiveFormGame>(GameFromJson(ReadJsonFile(a)))));
  EXPECT_EQ(Slurp(a), Slurp(b));
  EXPECT_EQ(Slurp(a).back(), '\n');
  std::filesystem::remove_all(dir);
}

TEST(Serialization, RejectsMalformedInput) {
  EXPECT_THROW(ModelFromJson(Json::parse(R"({"kind":"probit"})")), GameError);
  EXPECT_THROW(ModelFromJson(Json::parse(R"({"kind":"logit","lambda":-1})")),
               GameError);
  // Ragged payoff matrix.
  EXPECT_THROW(NormalFormGameFromJson(Json::parse(
                   R"({"leader_payoffs":[[1,2],[3]],"zero_sum":true})")),
               GameError);
  // Zero-sum flag contradicted by the follower matrix.
  EXPECT_THROW(NormalFormGameFromJson(Json::parse(
                   R"({"leader_payoffs":[[1]],"follower_payoffs":[[1]],"zero_sum":true})")),
               GameError);
  // Chance probabilities that do not sum to one.
  Json bad = ToJson(zoo::OneCardPoker(3));
  for (Json& n : bad["nodes"]) {
    if (n.contains("chance_probs")) n["chance_probs"][0] = 0.5;
  }
  EXPECT_THROW(ExtensiveFormGameFromJson(bad), GameError);
  // A node that points at a missing parent.
  Json orphan = ToJson(zoo::Goofspiel(2));
  orphan["nodes"][1]["parent"] = 100000;
  EXPECT_THROW(ExtensiveFormGameFromJson(orphan), GameError);
  EXPECT_THROW(StrategyFromJson(Json::parse(R"({"player":"leader","probs":[[0.5,0.6]]})")),
               GameError);
  EXPECT_THROW(ReadJsonFile("/nonexistent/quantal.json"), GameError);
}

}  // namespace
}  // namespace quantal
