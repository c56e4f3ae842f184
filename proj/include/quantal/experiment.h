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

#ifndef QUANTAL_EXPERIMENT_H_
#define QUANTAL_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quantal/quantal_model.h"
#include "quantal/serialization.h"

namespace quantal {

// One family of games and the seeds to instantiate it with.
struct GameSpec {
  std::string family;
  Json params = Json::object();
  std::vector<std::uint64_t> seeds = {0};
};

struct AlgorithmSpec {
  std::string name;
  Json params = Json::object();
};

struct ExperimentConfig {
  std::vector<GameSpec> games;
  std::vector<AlgorithmSpec> algorithms;
  QuantalModel model = QuantalModel::Logit(1.0);
  // Algorithms train against the model with lambda multiplied by this.
  double lambda_multiplier = 1.0;
  std::vector<double> lambdas = {0.0, 1.0, 10.0};
  std::vector<double> p_grid;
  double value_tolerance = 1e-6;
  long value_max_iterations = 200000;
  bool traces = false;
  // When false the wall_ms columns are left empty so reruns are
  // byte-identical.
  bool record_wall_ms = false;
  int workers = 1;
  std::uint64_t seed = 0;
  std::string out_dir = "results";

  static ExperimentConfig FromJson(const Json& j);
  // Throws GameError for empty game or algorithm lists, duplicate seeds or
  // unknown names.
  void Validate(bool need_algorithms = true) const;
};

struct ResultRow {
  std::string game_id;
  std::string family;
  std::uint64_t seed = 0;
  std::string algorithm;
  std::optional<double> lambda;
  long iterations = 0;
  std::optional<double> gain;
  std::optional<double> exploitability;
  double eu_vs_qr = 0.0;
  double eu_vs_br = 0.0;
  std::optional<double> tuned_param;
  double wall_ms = 0.0;
};

inline constexpr const char* kResultsHeader =
    "game_id,family,seed,algorithm,lambda,iterations,gain,exploitability,"
    "eu_vs_qr,eu_vs_br,tuned_param,wall_ms";
inline constexpr const char* kTraceHeader =
    "iter,p_or_alpha,gain_current,epsilon_br,wall_ms";
inline constexpr const char* kGaTraceHeader =
    "restart_id,iter,objective,step,grad_norm";

// Shortest round-trip representation; empty for NaN.
std::string FormatNumber(double v);
std::string FormatCsv(const std::vector<ResultRow>& rows, bool with_wall_ms);

// Identifier {family}_{params}_{seed} used for file names and CSV rows.
std::string GameId(const GameSpec& spec, std::uint64_t seed);

// Each command writes into config.out_dir and returns the rows it wrote.
// Solver errors propagate as GameError after all jobs have finished.
std::vector<std::string> CmdGenerate(const ExperimentConfig& config);
std::vector<ResultRow> CmdSolve(const ExperimentConfig& config);
std::vector<ResultRow> CmdSweepLambda(const ExperimentConfig& config);
std::vector<ResultRow> CmdPProfile(const ExperimentConfig& config);
// Loads and validates every game file; returns one message per failure.
std::vector<std::string> CmdValidate(const std::vector<std::string>& paths);

}  // namespace quantal

#endif  // QUANTAL_EXPERIMENT_H_
