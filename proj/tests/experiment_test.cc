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
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "quantal/experiment.h"
#include "quantal/game_zoo.h"
#include "quantal/metrics.h"

namespace quantal {
namespace {

namespace fs = std::filesystem;

class ExperimentTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("quantal_exp_" +
             std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(root_);
    fs::create_directories(root_);
  }
  void TearDown() override { fs::remove_all(root_); }

  std::string Dir(const std::string& name) const { return (root_ / name).string(); }

  static std::string Slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static ExperimentConfig Parse(const std::string& text, const std::string& out) {
    ExperimentConfig c = ExperimentConfig::FromJson(Json::parse(text));
    c.out_dir = out;
    return c;
  }

  fs::path root_;
};

const ResultRow& Find(const std::vector<ResultRow>& rows, const std::string& algo) {
  for (const ResultRow& r : rows) {
    if (r.algorithm == algo) return r;
  }
  throw std::runtime_error("no row for " + algo);
}

TEST(Format, Numbers) {
  EXPECT_EQ(FormatNumber(0.1), "0.1");
  EXPECT_EQ(FormatNumber(-0.0), "0");
  EXPECT_EQ(FormatNumber(3.0), "3");
  EXPECT_EQ(FormatNumber(std::nan("")), "");
  EXPECT_EQ(std::stod(FormatNumber(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Format, CsvHeaderAndEmptyFields) {
  ResultRow r;
  r.game_id = "g_0";
  r.family = "g";
  r.algorithm = "nash";
  r.iterations = 5;
  r.eu_vs_qr = 0.5;
  r.eu_vs_br = -1.0;
  const std::string csv = FormatCsv({r}, false);
  EXPECT_EQ(csv,
            "game_id,family,seed,algorithm,lambda,iterations,gain,exploitability,"
            "eu_vs_qr,eu_vs_br,tuned_param,wall_ms\n"
            "g_0,g,0,nash,,5,,,0.5,-1,,\n");
}

TEST(Format, GameIds) {
  GameSpec s{"random_nfg", Json::parse(R"({"rows":10,"cols":10})")};
  EXPECT_EQ(GameId(s, 7), "random_nfg_10x10_7");
  GameSpec e{"random_efg", Json::parse(R"({"set":2})")};
  EXPECT_EQ(GameId(e, 0), "random_efg_set2_0");
  GameSpec b{"badqne"};
  EXPECT_EQ(GameId(b, 0), "badqne_0");
}

TEST_F(ExperimentTest, GenerateIsSeededAndValid) {
  const std::string cfg = R"({
    "games": [{"family": "random_nfg", "params": {"rows": 4, "cols": 3},
               "seeds": 3},
              {"family": "random_efg", "params": {"set": 2}, "seeds": [5]}]})";
  const auto a = CmdGenerate(Parse(cfg, Dir("a")));
  const auto b = CmdGenerate(Parse(cfg, Dir("b")));
  ASSERT_EQ(a.size(), 4u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(Slurp(a[i]), Slurp(b[i]));
  }
  EXPECT_TRUE(fs::exists(Dir("a") + "/random_nfg_4x3_2.json"));
  EXPECT_NE(Slurp(a[0]), Slurp(a[1]));
  EXPECT_TRUE(CmdValidate({Dir("a")}).empty());

  std::ofstream(Dir("a") + "/broken.json") << "{\"leader_payoffs\": [[1, 2], [3]]}";
  EXPECT_EQ(CmdValidate({Dir("a")}).size(), 1u);
}

TEST_F(ExperimentTest, GenerateHundredEfgs) {
  const auto paths = CmdGenerate(Parse(
      R"({"games": [{"family": "random_efg", "params": {"set": 2}, "seeds": 100}],
          "workers": 2})",
      Dir("efg")));
  EXPECT_EQ(paths.size(), 100u);
  EXPECT_TRUE(CmdValidate({Dir("efg")}).empty());
}

TEST_F(ExperimentTest, ConfigErrors) {
  EXPECT_THROW(CmdSolve(Parse(R"({"games": [{"family": "badqne"}]})", Dir("x"))),
               GameError);
  EXPECT_THROW(CmdSolve(Parse(R"({"games": [{"family": "badqne"}],
                                  "algorithms": ["simplex"]})",
                              Dir("x"))),
               GameError);
  EXPECT_THROW(CmdSolve(Parse(R"({"games": [{"family": "nope"}],
                                  "algorithms": ["nash"]})",
                              Dir("x"))),
               GameError);
  EXPECT_THROW(CmdSolve(Parse(R"({"games": [{"family": "badqne"}],
                                  "algorithms": ["nash", "nash"]})",
                              Dir("x"))),
               GameError);
  EXPECT_THROW(ExperimentConfig::FromJson(Json::parse("[1, 2]")), GameError);
}

TEST_F(ExperimentTest, BadQneRows) {
  const std::vector<ResultRow> rows = CmdSolve(Parse(R"({
    "games": [{"family": "badqne"}],
    "algorithms": [{"name": "nash", "iterations": 100000, "tolerance": 1e-7},
                   {"name": "qne", "iterations": 100000, "tolerance": 1e-7},
                   "comb", {"name": "rqr", "iterations": 2000}, "ga"]})",
                                                     Dir("out")));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_NEAR(Find(rows, "nash").eu_vs_qr, 1.6438, 1e-3);
  EXPECT_NEAR(Find(rows, "qne").eu_vs_qr, 1.6366, 1e-3);
  EXPECT_GT(*Find(rows, "nash").gain, *Find(rows, "qne").gain);
  EXPECT_GE(*Find(rows, "comb").gain, *Find(rows, "nash").gain - 1e-12);
  EXPECT_GE(*Find(rows, "ga").gain, *Find(rows, "comb").gain - 1e-9);
  EXPECT_EQ(*Find(rows, "nash").lambda, 1.0);
  EXPECT_TRUE(Find(rows, "rqr").tuned_param.has_value());

  const std::string csv = Slurp(Dir("out") + "/results.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kResultsHeader);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
  EXPECT_TRUE(fs::exists(Dir("out") + "/strategies/badqne_0__ga.json"));
  EXPECT_FALSE(fs::exists(Dir("out") + "/traces"));
}

TEST_F(ExperimentTest, TracesWhenRequested) {
  CmdSolve(Parse(R"({"games": [{"family": "game1"}],
                     "model": {"kind": "logit", "lambda": 0.92},
                     "algorithms": [{"name": "qne", "iterations": 300,
                                     "check_every": 50},
                                    {"name": "ga", "restarts": 2}],
                     "traces": true})",
                 Dir("t")));
  const std::string trace = Slurp(Dir("t") + "/traces/game1_0__qne.csv");
  EXPECT_EQ(trace.substr(0, trace.find('\n')), kTraceHeader);
  const std::string ga = Slurp(Dir("t") + "/traces/game1_0__ga_ga.csv");
  EXPECT_EQ(ga.substr(0, ga.find('\n')), kGaTraceHeader);
}

TEST_F(ExperimentTest, SweepLambdaRows) {
  const std::vector<ResultRow> rows = CmdSweepLambda(Parse(R"({
    "games": [{"family": "random_nfg", "params": {"rows": 5, "cols": 5},
               "seeds": 2}],
    "algorithms": [{"name": "nash", "iterations": 2000},
                   {"name": "qne", "iterations": 2000}],
    "lambdas": [0, 1, 10]})",
                                                           Dir("s")));
  ASSERT_EQ(rows.size(), 12u);
  std::map<std::string, int> per_strategy;
  for (const ResultRow& r : rows) ++per_strategy[r.game_id + r.algorithm];
  for (const auto& [k, n] : per_strategy) EXPECT_EQ(n, 3) << k;
  // The lambda = 0 rows face a uniform opponent, identical for both strategies
  // only through the value, not the payoff, so just check the labels.
  EXPECT_EQ(*rows[0].lambda, 0.0);
  EXPECT_EQ(*rows[2].lambda, 10.0);
  EXPECT_TRUE(fs::exists(Dir("s") + "/sweep_lambda.csv"));
}

TEST_F(ExperimentTest, PProfileEndpoints) {
  const std::string algos = R"(
    "algorithms": [{"name": "nash", "iterations": 300},
                   {"name": "qne", "iterations": 300},
                   {"name": "cfr_br", "iterations": 300},
                   {"name": "rqr", "iterations": 300}])";
  const std::string games = R"("games": [{"family": "one_card_poker",
                                           "params": {"deck_size": 3}}])";
  const std::vector<ResultRow> solved =
      CmdSolve(Parse("{" + games + "," + algos + "}", Dir("solve")));
  const std::vector<ResultRow> profile = CmdPProfile(
      Parse("{" + games + "," + algos + R"(, "p_grid": [0, 0.5, 1]})", Dir("p")));
  ASSERT_EQ(profile.size(), 6u);
  // COMB rows first: alpha 0 is the Nash input, alpha 1 the QNE input.
  EXPECT_EQ(profile[0].algorithm, "comb");
  EXPECT_EQ(profile[0].eu_vs_qr, Find(solved, "nash").eu_vs_qr);
  EXPECT_EQ(profile[2].eu_vs_qr, Find(solved, "qne").eu_vs_qr);
  // RQR with p frozen at 0 or 1 reduces to CFR-BR and CFR-QR.
  EXPECT_EQ(profile[3].algorithm, "rqr");
  EXPECT_EQ(profile[3].eu_vs_qr, Find(solved, "cfr_br").eu_vs_qr);
  EXPECT_EQ(profile[5].eu_vs_qr, Find(solved, "qne").eu_vs_qr);
  EXPECT_EQ(*profile[4].tuned_param, 0.5);
  EXPECT_TRUE(fs::exists(Dir("p") + "/strategies/one_card_poker_k3_0__comb_p0.5.json"));
}

TEST_F(ExperimentTest, PProfileLeduc) {
  const std::vector<ResultRow> rows = CmdPProfile(Parse(R"({
    "games": [{"family": "leduc"}],
    "model": {"kind": "logit", "lambda": 2},
    "value_max_iterations": 2000,
    "algorithms": [{"name": "nash", "iterations": 30},
                   {"name": "qne", "iterations": 30},
                   {"name": "rqr", "iterations": 30}]})",
                                                        Dir("l")));
  EXPECT_EQ(rows.size(), 22u);
  for (const ResultRow& r : rows) EXPECT_TRUE(r.exploitability.has_value());
}

TEST_F(ExperimentTest, StoredStrategyReproducesGain) {
  const std::string games = R"("games": [{"family": "random_nfg",
                                           "params": {"rows": 6, "cols": 6},
                                           "seeds": 2}])";
  const std::vector<ResultRow> first = CmdSolve(Parse(
      "{" + games + R"(, "algorithms": [{"name": "ga", "restarts": 3}]})",
      Dir("first")));
  const std::vector<ResultRow> again = CmdSolve(Parse(
      "{" + games + R"(, "algorithms": [{"name": "stored", "dir": ")" +
          Dir("first") + R"(/strategies", "of": "ga"}]})",
      Dir("again")));
  ASSERT_EQ(first.size(), again.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_NEAR(*first[i].gain, *again[i].gain, 1e-9);
    EXPECT_EQ(first[i].eu_vs_qr, again[i].eu_vs_qr);
  }
}

TEST_F(ExperimentTest, WorkerCountDoesNotChangeOutput) {
  const std::string cfg = R"({
    "games": [{"family": "random_nfg", "params": {"rows": 6, "cols": 6},
               "seeds": 3},
              {"family": "random_efg", "params": {"set": 1}, "seeds": 2}],
    "algorithms": [{"name": "nash", "iterations": 500},
                   {"name": "qne", "iterations": 500}, "comb",
                   {"name": "rqr", "iterations": 500},
                   {"name": "ga", "restarts": 2}],
    "traces": true})";
  ExperimentConfig one = Parse(cfg, Dir("w1"));
  ExperimentConfig four = Parse(cfg, Dir("w4"));
  four.workers = 4;
  CmdSolve(one);
  CmdSolve(four);
  for (const auto& entry : fs::recursive_directory_iterator(Dir("w1"))) {
    if (!entry.is_regular_file()) continue;
    const fs::path rel = fs::relative(entry.path(), Dir("w1"));
    EXPECT_EQ(Slurp(entry.path()), Slurp(fs::path(Dir("w4")) / rel)) << rel;
  }
}

TEST_F(ExperimentTest, LambdaMultiplierTrainsAgainstStrongerModel) {
  const std::string base = R"("games": [{"family": "badqne"}],
                              "algorithms": [{"name": "qne", "iterations": 20000}])";
  const auto plain = CmdSolve(Parse("{" + base + "}", Dir("a")));
  const auto strong =
      CmdSolve(Parse("{" + base + R"(, "lambda_multiplier": 2})", Dir("b")));
  // Evaluation stays at the configured lambda.
  EXPECT_EQ(*plain[0].lambda, *strong[0].lambda);
  EXPECT_NE(plain[0].eu_vs_qr, strong[0].eu_vs_qr);
}

}  // namespace
}  // namespace quantal
