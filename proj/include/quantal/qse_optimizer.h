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

#ifndef QUANTAL_QSE_OPTIMIZER_H_
#define QUANTAL_QSE_OPTIMIZER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "quantal/extensive_form_game.h"
#include "quantal/normal_form_game.h"
#include "quantal/quantal_model.h"
#include "quantal/solve_report.h"
#include "quantal/strategy.h"

namespace quantal {

struct GaConfig {
  long max_iters = 2000;
  double step_size_init = 1.0;
  double armijo_backtrack_factor = 0.5;
  // Sufficient-increase constant of the Armijo test.
  double armijo_c = 1e-4;
  // Stop when an accepted step moves the iterate less than this (L-inf).
  double convergence_tol = 1e-12;
  // 1 start from the Nash strategy plus restarts - 1 Dirichlet(1) draws.
  int restarts = 8;
  double finite_diff_h = 1e-6;
  std::uint64_t seed = 0;
  bool record_trace = false;

  // Throws GameError unless every field is positive and restarts >= 1.
  void Validate() const;
};

// Euclidean projection onto the probability simplex (Michelot's algorithm).
void ProjectToSimplex(std::span<const double> v, std::span<double> out);
std::vector<double> ProjectToSimplex(std::span<const double> v);

// sum_b u_L(x, b) q(u_F(x, b)) / sum_c q(u_F(x, c)): the leader's utility
// against the quantal response to x.
double QseObjectiveNfg(const NormalFormGame& game, std::span<const double> x,
                       const QuantalModel& model);

// Analytic gradient of QseObjectiveNfg:
//   U_L w + U_F (s * w * (h - f))
// with h = x^T U_L, w the response, s the slope of log q at x^T U_F.
void QseGradientNfg(const NormalFormGame& game, std::span<const double> x,
                    const QuantalModel& model, std::span<double> grad);

// Multi-restart projected gradient ascent. The first restart starts from
// `nash_start` (computed by RM+ when absent).
SolveReport SolveQseGaNfg(const NormalFormGame& game, const QuantalModel& model,
                          const GaConfig& config,
                          const std::optional<BehavioralStrategy>& nash_start =
                              std::nullopt);

// Leader utility against the counterfactual quantal response, optimized over
// behavioral strategies with central finite-difference gradients and
// per-infoset projection.
double QseObjectiveEfg(const ExtensiveFormGame& game,
                       const BehavioralStrategy& leader,
                       const QuantalModel& model);
SolveReport SolveQseGaEfg(const ExtensiveFormGame& game,
                          const QuantalModel& model, const GaConfig& config,
                          const std::optional<BehavioralStrategy>& nash_start =
                              std::nullopt);

// Maximizes the gain over {x : min_c (x^T U_L)_c >= value - tolerance} with
// the penalty kPenalty * max(0, value - tolerance - min_c (x^T U_L)_c).
// Returns the best feasible iterate, or `nash_start` with feasible = false
// when no iterate was feasible. Zero-sum games only.
inline constexpr double kNeSearchPenalty = 1e4;
SolveReport BestNeSearch(const NormalFormGame& game, const QuantalModel& model,
                         const GaConfig& config,
                         const BehavioralStrategy& nash_start, double value,
                         double tolerance);

}  // namespace quantal

#endif  // QUANTAL_QSE_OPTIMIZER_H_
