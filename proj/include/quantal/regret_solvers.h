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

#ifndef QUANTAL_REGRET_SOLVERS_H_
#define QUANTAL_REGRET_SOLVERS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quantal/extensive_form_game.h"
#include "quantal/metrics.h"
#include "quantal/solve_report.h"
#include "quantal/normal_form_game.h"
#include "quantal/quantal_model.h"
#include "quantal/strategy.h"

namespace quantal {

// Regret-matching+ state for one player: cumulative regrets clamped at zero
// and a linearly weighted, reach-weighted strategy sum.
class RegretMatcher {
 public:
  explicit RegretMatcher(BehavioralStrategy uniform);

  const BehavioralStrategy& current() const { return current_; }
  std::span<const double> regrets() const { return regret_; }
  long updates() const { return updates_; }

  // One update from counterfactual action values. `reach` holds the own reach
  // of the current strategy at each infoset; the current strategy enters the
  // average with weight reach * `weight`.
  void Update(std::span<const double> action_values,
              std::span<const double> reach, double weight);

  BehavioralStrategy Average() const;

 private:
  BehavioralStrategy current_;
  std::vector<double> regret_;
  std::vector<double> strategy_sum_;
  long updates_ = 0;
};

struct SolverOptions {
  long iterations = 10000;
  // Early stop once the solver's certificate falls below this; 0 disables.
  double tolerance = 0.0;
  long check_every = 100;
  // Needed for gain in traces and reports of zero-sum games.
  std::optional<double> game_value;
  bool record_trace = false;
};

// RM+ (normal form) / CFR+ (extensive form) self-play with alternating updates.
SolveReport SolveNash(const NormalFormGame& game, const SolverOptions& options);
SolveReport SolveNash(const ExtensiveFormGame& game,
                      const SolverOptions& options);

// RM-QR / CFR-QR: the leader learns against the quantal response to her
// current strategy. Converges once the average is an eps-BR to its own quantal
// response; `tolerance` bounds that certificate.
SolveReport SolveQne(const NormalFormGame& game, const QuantalModel& model,
                     const SolverOptions& options);
SolveReport SolveQne(const ExtensiveFormGame& game, const QuantalModel& model,
                     const SolverOptions& options);

// The leader learns against an exact best response each iteration.
SolveReport SolveCfrBr(const NormalFormGame& game, const QuantalModel& model,
                       const SolverOptions& options);
SolveReport SolveCfrBr(const ExtensiveFormGame& game, const QuantalModel& model,
                       const SolverOptions& options);

struct CombOptions {
  int sweep_size = 11;
  std::optional<double> game_value;
};

// Best of the convex combinations alpha * qne + (1 - alpha) * nash over an
// evenly spaced alpha grid including both endpoints.
SolveReport SolveComb(const NormalFormGame& game, const QuantalModel& model,
                      const BehavioralStrategy& nash,
                      const BehavioralStrategy& qne, const CombOptions& options);
SolveReport SolveComb(const ExtensiveFormGame& game, const QuantalModel& model,
                      const BehavioralStrategy& nash,
                      const BehavioralStrategy& qne, const CombOptions& options);

// Reach-weighted convex combination with weight `alpha` on `s1`:
//   (pi1 s1 alpha + pi2 s2 (1 - alpha)) / (pi1 alpha + pi2 (1 - alpha))
// per infoset. Infosets with zero denominator get the uniform distribution
// and are listed in `fallback`.
BehavioralStrategy ConvexCombineEfg(const ExtensiveFormGame& game,
                                    const BehavioralStrategy& s1,
                                    const BehavioralStrategy& s2, double alpha,
                                    std::vector<int>* fallback = nullptr);

struct RqrOptions {
  long phase1_iterations = 5000;
  long phase2_iterations = 5000;
  std::uint64_t seed = 0;
  // Skips phase 1 and uses this p.
  std::optional<double> fixed_p;
  double p0 = 0.5;
  double step = 0.01;
  double threshold = 1.00001;
  std::optional<double> game_value;
  bool record_trace = false;
  long trace_every = 100;
};

// Restricted quantal response: the follower plays the quantal response with
// probability p and a best response otherwise. Phase 1 adapts p from the
// change in gain, phase 2 reruns from scratch with p frozen.
SolveReport SolveRqr(const NormalFormGame& game, const QuantalModel& model,
                     const RqrOptions& options);
SolveReport SolveRqr(const ExtensiveFormGame& game, const QuantalModel& model,
                     const RqrOptions& options);

// One step of the phase-1 p dynamics. Returns the new p and updates `step`.
// `qr_drawn` tells whether the last response was the quantal one.
double AdaptP(double p, double* step, double decay, double threshold,
              bool qr_drawn, double old_gain, double new_gain);

}  // namespace quantal

#endif  // QUANTAL_REGRET_SOLVERS_H_
