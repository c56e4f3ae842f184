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

#ifndef QUANTAL_SOLVE_REPORT_H_
#define QUANTAL_SOLVE_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include "quantal/metrics.h"
#include "quantal/strategy.h"

namespace quantal {

struct TraceRow {
  long iter = 0;
  double p_or_alpha = 0.0;
  // NaN where not computed.
  double gain_current = 0.0;
  double epsilon_br = 0.0;
  double wall_ms = 0.0;
};

struct GaTraceRow {
  int restart_id = 0;
  long iter = 0;
  double objective = 0.0;
  double step = 0.0;
  double grad_norm = 0.0;
};

struct LocalOptimum {
  BehavioralStrategy strategy;
  double objective = 0.0;
  long iterations = 0;
  bool converged = false;
};

struct SolveReport {
  std::string algorithm;
  // Leader strategy returned by the algorithm (the average for regret
  // methods).
  BehavioralStrategy strategy;
  // Last iterate of the leader.
  BehavioralStrategy final_strategy;
  // Average follower strategy; only filled by SolveNash.
  BehavioralStrategy follower;
  long iterations = 0;
  bool converged = false;
  // SolveNash: max eps-BR of both players. SolveQne and friends: eps-BR of
  // the leader's strategy against the follower response it is trained on.
  double certificate = 0.0;
  // SolveNash only: leader's guaranteed value and best-response value.
  double value_lower = 0.0;
  double value_upper = 0.0;
  std::optional<double> tuned_param;
  Evaluation metrics;
  std::vector<TraceRow> trace;
  // Gradient-ascent solvers: per-iteration trace and the local optimum
  // reached from every restart.
  std::vector<GaTraceRow> ga_trace;
  std::vector<LocalOptimum> local_optima;
  // best_ne_search: whether the returned strategy satisfies the constraint.
  bool feasible = true;
  // Infosets where a convex combination fell back to uniform.
  std::vector<int> fallback_infosets;
  double wall_ms = 0.0;
};

}  // namespace quantal

#endif  // QUANTAL_SOLVE_REPORT_H_
