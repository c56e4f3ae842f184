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

#ifndef QUANTAL_METRICS_H_
#define QUANTAL_METRICS_H_

#include <optional>
#include <string>
#include <vector>

#include "quantal/extensive_form_game.h"
#include "quantal/normal_form_game.h"
#include "quantal/quantal_model.h"
#include "quantal/strategy.h"

namespace quantal {

// Reference value of a zero-sum game: the bracket [lower, upper] between the
// leader's guaranteed value and her best-response value against the
// follower's average strategy of a CFR+/RM+ run.
struct GameValue {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double gap = 0.0;  // max over players of the eps-BR certificates
  long iterations = 0;
};

GameValue ComputeGameValue(const NormalFormGame& game, double tolerance = 1e-6,
                           long max_iterations = 1000000);
GameValue ComputeGameValue(const ExtensiveFormGame& game,
                           double tolerance = 1e-6,
                           long max_iterations = 1000000);

// u_L(sigma, QR(sigma)) - v*.
double Gain(const NormalFormGame& game, const BehavioralStrategy& leader,
            const QuantalModel& model, double game_value);
double Gain(const ExtensiveFormGame& game, const BehavioralStrategy& leader,
            const QuantalModel& model, double game_value);

// v* - u_L(sigma, BR(sigma)). Zero-sum games only.
double Exploitability(const NormalFormGame& game,
                      const BehavioralStrategy& leader, double game_value);
double Exploitability(const ExtensiveFormGame& game,
                      const BehavioralStrategy& leader, double game_value);

// Leader utility against the quantal follower and against a best-responding
// follower that breaks ties in the leader's favour. gain and exploitability
// are filled only for zero-sum games with a known value.
struct Evaluation {
  double eu_vs_qr = 0.0;
  double eu_vs_br = 0.0;
  std::optional<double> gain;
  std::optional<double> exploitability;
};

Evaluation Evaluate(const NormalFormGame& game, const BehavioralStrategy& leader,
                    const QuantalModel& model,
                    std::optional<double> game_value = std::nullopt);
Evaluation Evaluate(const ExtensiveFormGame& game,
                    const BehavioralStrategy& leader, const QuantalModel& model,
                    std::optional<double> game_value = std::nullopt);

// The model used for rationality `lambda` in sweeps: logit for lambda > 0,
// the uniform limit at lambda == 0.
QuantalModel LogitOrUniform(double lambda);

struct NamedStrategy {
  std::string name;
  BehavioralStrategy strategy;
};

struct SweepRow {
  std::string name;
  double lambda = 0.0;
  Evaluation evaluation;
};

std::vector<SweepRow> LambdaSweep(const NormalFormGame& game,
                                  const std::vector<NamedStrategy>& strategies,
                                  const std::vector<double>& lambdas,
                                  std::optional<double> game_value);
std::vector<SweepRow> LambdaSweep(const ExtensiveFormGame& game,
                                  const std::vector<NamedStrategy>& strategies,
                                  const std::vector<double>& lambdas,
                                  std::optional<double> game_value);

}  // namespace quantal

#endif  // QUANTAL_METRICS_H_
