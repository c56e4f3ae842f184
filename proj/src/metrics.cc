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

#include "quantal/metrics.h"

#include "quantal/evaluation.h"
#include "quantal/regret_solvers.h"
#include "quantal/responses.h"

namespace quantal {

namespace {

BehavioralStrategy QuantalFollower(const NormalFormGame& game,
                                   const BehavioralStrategy& leader,
                                   const QuantalModel& model) {
  return BehavioralStrategy::Mixed(
      Player::kFollower, NfgQuantalResponse(game, leader.flat(), model));
}

BehavioralStrategy QuantalFollower(const ExtensiveFormGame& game,
                                   const BehavioralStrategy& leader,
                                   const QuantalModel& model) {
  return Clqr(game, leader, model);
}

void RequireLeader(const BehavioralStrategy& s) {
  if (s.player() != Player::kLeader) {
    throw DomainError("metrics are defined for leader strategies");
  }
}

template <typename Game>
double GainImpl(const Game& game, const BehavioralStrategy& leader,
                const QuantalModel& model, double game_value) {
  RequireLeader(leader);
  leader.Validate(game);
  const StrategyProfile profile{leader, QuantalFollower(game, leader, model)};
  return ExpectedUtility(game, profile)[0] - game_value;
}

template <typename Game>
double ExploitabilityImpl(const Game& game, const BehavioralStrategy& leader,
                          double game_value) {
  RequireLeader(leader);
  if (!game.zero_sum()) {
    throw GameError(
        "exploitability is defined for zero-sum games; use eu_vs_br");
  }
  const BestResponse br = ComputeBestResponse(game, leader);
  return game_value + br.value;
}

template <typename Game>
Evaluation EvaluateImpl(const Game& game, const BehavioralStrategy& leader,
                        const QuantalModel& model,
                        std::optional<double> game_value) {
  RequireLeader(leader);
  leader.Validate(game);
  Evaluation e;
  const StrategyProfile profile{leader, QuantalFollower(game, leader, model)};
  e.eu_vs_qr = ExpectedUtility(game, profile)[0];
  const FavoringBestResponse br = LeaderFavoringBestResponse(game, leader);
  e.eu_vs_br = br.leader_value;
  if (game.zero_sum() && game_value) {
    e.gain = e.eu_vs_qr - *game_value;
    e.exploitability = *game_value + br.value;
  }
  return e;
}

template <typename Game>
std::vector<SweepRow> SweepImpl(const Game& game,
                                const std::vector<NamedStrategy>& strategies,
                                const std::vector<double>& lambdas,
                                std::optional<double> game_value) {
  std::vector<SweepRow> rows;
  for (const NamedStrategy& s : strategies) {
    for (double lambda : lambdas) {
      rows.push_back({s.name, lambda,
                      EvaluateImpl(game, s.strategy, LogitOrUniform(lambda),
                                   game_value)});
    }
  }
  return rows;
}

template <typename Game>
GameValue GameValueImpl(const Game& game, double tolerance, long max_iters) {
  if (!game.zero_sum()) {
    throw GameError("the game value is defined for zero-sum games");
  }
  SolverOptions options;
  options.iterations = max_iters;
  options.tolerance = tolerance;
  const SolveReport report = SolveNash(game, options);
  GameValue v;
  v.lower = report.value_lower;
  v.upper = report.value_upper;
  v.value = 0.5 * (v.lower + v.upper);
  v.gap = report.certificate;
  v.iterations = report.iterations;
  return v;
}

}  // namespace

GameValue ComputeGameValue(const NormalFormGame& game, double tolerance,
                           long max_iterations) {
  return GameValueImpl(game, tolerance, max_iterations);
}
GameValue ComputeGameValue(const ExtensiveFormGame& game, double tolerance,
                           long max_iterations) {
  return GameValueImpl(game, tolerance, max_iterations);
}

double Gain(const NormalFormGame& game, const BehavioralStrategy& leader,
            const QuantalModel& model, double game_value) {
  return GainImpl(game, leader, model, game_value);
}
double Gain(const ExtensiveFormGame& game, const BehavioralStrategy& leader,
            const QuantalModel& model, double game_value) {
  return GainImpl(game, leader, model, game_value);
}

double Exploitability(const NormalFormGame& game,
                      const BehavioralStrategy& leader, double game_value) {
  return ExploitabilityImpl(game, leader, game_value);
}
double Exploitability(const ExtensiveFormGame& game,
                      const BehavioralStrategy& leader, double game_value) {
  return ExploitabilityImpl(game, leader, game_value);
}

Evaluation Evaluate(const NormalFormGame& game, const BehavioralStrategy& leader,
                    const QuantalModel& model,
                    std::optional<double> game_value) {
  return EvaluateImpl(game, leader, model, game_value);
}
Evaluation Evaluate(const ExtensiveFormGame& game,
                    const BehavioralStrategy& leader, const QuantalModel& model,
                    std::optional<double> game_value) {
  return EvaluateImpl(game, leader, model, game_value);
}

QuantalModel LogitOrUniform(double lambda) {
  if (lambda < 0.0) throw GameError("lambda must be nonnegative");
  return lambda == 0.0 ? QuantalModel::Uniform() : QuantalModel::Logit(lambda);
}

std::vector<SweepRow> LambdaSweep(const NormalFormGame& game,
                                  const std::vector<NamedStrategy>& strategies,
                                  const std::vector<double>& lambdas,
                                  std::optional<double> game_value) {
  return SweepImpl(game, strategies, lambdas, game_value);
}
std::vector<SweepRow> LambdaSweep(const ExtensiveFormGame& game,
                                  const std::vector<NamedStrategy>& strategies,
                                  const std::vector<double>& lambdas,
                                  std::optional<double> game_value) {
  return SweepImpl(game, strategies, lambdas, game_value);
}

}  // namespace quantal
