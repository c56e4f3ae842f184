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

#include "quantal/regret_solvers.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <utility>

#include "quantal/evaluation.h"
#include "quantal/random.h"
#include "quantal/responses.h"

namespace quantal {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// The operations the solvers need, for either game representation.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual bool zero_sum() const = 0;
  virtual BehavioralStrategy Uniform(Player p) const = 0;
  // Counterfactual action values of `p` (flat layout).
  virtual void ActionValues(const BehavioralStrategy& leader,
                            const BehavioralStrategy& follower, Player p,
                            std::vector<double>& out) = 0;
  virtual void OwnReach(const BehavioralStrategy& s,
                        std::vector<double>& out) = 0;
  // Follower response; valid until the next call.
  virtual const BehavioralStrategy& Respond(const BehavioralStrategy& leader,
                                            bool quantal,
                                            const QuantalModel* model) = 0;
  virtual std::array<double, 2> Utility(const BehavioralStrategy& leader,
                                        const BehavioralStrategy& follower) = 0;
  // Best-response value of Opponent(opponent.player()).
  virtual double BestResponseValue(const BehavioralStrategy& opponent) = 0;
  virtual Evaluation Evaluate(const BehavioralStrategy& leader,
                              const QuantalModel& model,
                              std::optional<double> value) = 0;
  virtual BehavioralStrategy Combine(const BehavioralStrategy& s1,
                                     const BehavioralStrategy& s2,
                                     double alpha,
                                     std::vector<int>* fallback) = 0;
};

class NfgBackend final : public Backend {
 public:
  explicit NfgBackend(const NormalFormGame& game) : game_(game) {}

  bool zero_sum() const override { return game_.zero_sum(); }
  BehavioralStrategy Uniform(Player p) const override {
    return BehavioralStrategy::Uniform(game_, p);
  }
  void ActionValues(const BehavioralStrategy& leader,
                    const BehavioralStrategy& follower, Player p,
                    std::vector<double>& out) override {
    out = p == Player::kLeader
              ? LeaderActionValues(game_, p, follower.flat())
              : FollowerActionValues(game_, p, leader.flat());
  }
  void OwnReach(const BehavioralStrategy&, std::vector<double>& out) override {
    out.assign(1, 1.0);
  }
  const BehavioralStrategy& Respond(const BehavioralStrategy& leader,
                                    bool quantal,
                                    const QuantalModel* model) override {
    if (quantal) {
      response_ = BehavioralStrategy::Mixed(
          Player::kFollower, NfgQuantalResponse(game_, leader.flat(), *model));
    } else {
      const std::vector<double> u =
          FollowerActionValues(game_, Player::kFollower, leader.flat());
      const int best = static_cast<int>(
          std::max_element(u.begin(), u.end()) - u.begin());
      MixedStrategy pure(u.size(), 0.0);
      pure[best] = 1.0;
      response_ = BehavioralStrategy::Mixed(Player::kFollower, std::move(pure));
    }
    return response_;
  }
  std::array<double, 2> Utility(const BehavioralStrategy& leader,
                                const BehavioralStrategy& follower) override {
    return ExpectedUtility(game_, leader.flat(), follower.flat());
  }
  double BestResponseValue(const BehavioralStrategy& opponent) override {
    return ComputeBestResponse(game_, opponent).value;
  }
  Evaluation Evaluate(const BehavioralStrategy& leader,
                      const QuantalModel& model,
                      std::optional<double> value) override {
    return quantal::Evaluate(game_, leader, model, value);
  }
  BehavioralStrategy Combine(const BehavioralStrategy& s1,
                             const BehavioralStrategy& s2, double alpha,
                             std::vector<int>*) override {
    if (alpha == 1.0) return s1;
    if (alpha == 0.0) return s2;
    MixedStrategy mix(s1.flat().size());
    for (std::size_t a = 0; a < mix.size(); ++a) {
      mix[a] = alpha * s1.flat()[a] + (1.0 - alpha) * s2.flat()[a];
    }
    return BehavioralStrategy::Mixed(s1.player(), std::move(mix));
  }

 private:
  const NormalFormGame& game_;
  BehavioralStrategy response_;
};

class EfgBackend final : public Backend {
 public:
  explicit EfgBackend(const ExtensiveFormGame& game)
      : game_(game), eval_(game), engine_(game), br_engine_(game) {}

  bool zero_sum() const override { return game_.zero_sum(); }
  BehavioralStrategy Uniform(Player p) const override {
    return BehavioralStrategy::Uniform(game_, p);
  }
  void ActionValues(const BehavioralStrategy& leader,
                    const BehavioralStrategy& follower, Player p,
                    std::vector<double>& out) override {
    eval_.NodeValues(leader, follower);
    eval_.OthersReach(p == Player::kLeader ? follower : leader, p);
    out.resize(game_.num_infoset_actions(p));
    eval_.ActionValues(p, out);
  }
  void OwnReach(const BehavioralStrategy& s,
                std::vector<double>& out) override {
    eval_.OwnReach(s);
    const Player p = s.player();
    out.resize(game_.num_infosets(p));
    for (int i = 0; i < game_.num_infosets(p); ++i) {
      out[i] = eval_.own_reach(game_.infoset(p, i).nodes.front());
    }
  }
  const BehavioralStrategy& Respond(const BehavioralStrategy& leader,
                                    bool quantal,
                                    const QuantalModel* model) override {
    return engine_.Respond(leader,
                           quantal ? ResponseEngine::Rule::kQuantal
                                   : ResponseEngine::Rule::kBest,
                           model);
  }
  std::array<double, 2> Utility(const BehavioralStrategy& leader,
                                const BehavioralStrategy& follower) override {
    eval_.NodeValues(leader, follower);
    return eval_.root_values();
  }
  double BestResponseValue(const BehavioralStrategy& opponent) override {
    br_engine_.Respond(opponent, ResponseEngine::Rule::kBest);
    return br_engine_.values()[PlayerIndex(Opponent(opponent.player()))];
  }
  Evaluation Evaluate(const BehavioralStrategy& leader,
                      const QuantalModel& model,
                      std::optional<double> value) override {
    return quantal::Evaluate(game_, leader, model, value);
  }
  BehavioralStrategy Combine(const BehavioralStrategy& s1,
                             const BehavioralStrategy& s2, double alpha,
                             std::vector<int>* fallback) override {
    return ConvexCombineEfg(game_, s1, s2, alpha, fallback);
  }

 private:
  const ExtensiveFormGame& game_;
  TreeEvaluator eval_;
  ResponseEngine engine_;
  ResponseEngine br_engine_;
};

// Regret-matching+ step for `learner` against a fixed opponent strategy.
void LeaderStep(Backend& backend, RegretMatcher& learner,
                const BehavioralStrategy& follower, double weight,
                std::vector<double>& values, std::vector<double>& reach) {
  backend.ActionValues(learner.current(), follower, Player::kLeader, values);
  backend.OwnReach(learner.current(), reach);
  learner.Update(values, reach, weight);
}

// eps-BR of `leader` against the follower response it is trained on, plus the
// leader's utility against that response.
struct Certificate {
  double epsilon;
  double utility;
};

Certificate LeaderCertificate(Backend& backend,
                              const BehavioralStrategy& leader, bool quantal,
                              const QuantalModel& model) {
  const BehavioralStrategy follower = backend.Respond(leader, quantal, &model);
  const double u = backend.Utility(leader, follower)[0];
  return {backend.BestResponseValue(follower) - u, u};
}

SolveReport NashImpl(Backend& backend, const SolverOptions& options) {
  if (options.iterations < 1) throw GameError("iterations must be >= 1");
  const auto start = Clock::now();
  RegretMatcher leader(backend.Uniform(Player::kLeader));
  RegretMatcher follower(backend.Uniform(Player::kFollower));
  std::vector<double> values, reach;
  SolveReport report;
  report.algorithm = "nash";
  BehavioralStrategy avg_l, avg_f;
  const long check = std::max(1L, options.check_every);
  for (long t = 1; t <= options.iterations; ++t) {
    const double w = static_cast<double>(t);
    backend.ActionValues(leader.current(), follower.current(), Player::kLeader,
                         values);
    backend.OwnReach(leader.current(), reach);
    leader.Update(values, reach, w);
    backend.ActionValues(leader.current(), follower.current(),
                         Player::kFollower, values);
    backend.OwnReach(follower.current(), reach);
    follower.Update(values, reach, w);
    report.iterations = t;
    if (t % check != 0 && t != options.iterations) continue;
    avg_l = leader.Average();
    avg_f = follower.Average();
    const auto u = backend.Utility(avg_l, avg_f);
    const double br_l = backend.BestResponseValue(avg_f);
    const double br_f = backend.BestResponseValue(avg_l);
    report.certificate = std::max(br_l - u[0], br_f - u[1]);
    if (options.record_trace) {
      report.trace.push_back({t, kNaN, kNaN, report.certificate,
                              MillisSince(start)});
    }
    if (backend.zero_sum()) {
      report.value_lower = -br_f;
      report.value_upper = br_l;
    } else {
      report.value_lower = report.value_upper = u[0];
    }
    if (options.tolerance > 0.0 && report.certificate < options.tolerance) {
      report.converged = true;
      break;
    }
  }
  report.strategy = std::move(avg_l);
  report.follower = std::move(avg_f);
  report.final_strategy = leader.current();
  report.wall_ms = MillisSince(start);
  return report;
}

// Leader regret matching against a fixed response rule; shared by RM-QR and
// CFR-BR.
SolveReport LearnAgainst(Backend& backend, const QuantalModel& model,
                         bool quantal, const SolverOptions& options) {
  if (options.iterations < 1) throw GameError("iterations must be >= 1");
  const auto start = Clock::now();
  RegretMatcher leader(backend.Uniform(Player::kLeader));
  std::vector<double> values, reach;
  SolveReport report;
  report.algorithm = quantal ? "qne" : "cfr_br";
  const long check = std::max(1L, options.check_every);
  BehavioralStrategy avg;
  for (long t = 1; t <= options.iterations; ++t) {
    const BehavioralStrategy& response =
        backend.Respond(leader.current(), quantal, &model);
    LeaderStep(backend, leader, response, static_cast<double>(t), values,
               reach);
    report.iterations = t;
    if (t % check != 0 && t != options.iterations) continue;
    avg = leader.Average();
    const Certificate c = LeaderCertificate(backend, avg, quantal, model);
    report.certificate = c.epsilon;
    if (options.record_trace) {
      const double gain =
          options.game_value ? c.utility - *options.game_value : kNaN;
      report.trace.push_back({t, kNaN, gain, c.epsilon, MillisSince(start)});
    }
    if (options.tolerance > 0.0 && c.epsilon < options.tolerance) {
      report.converged = true;
      break;
    }
  }
  report.strategy = std::move(avg);
  report.final_strategy = leader.current();
  report.metrics = backend.Evaluate(report.strategy, model, options.game_value);
  report.wall_ms = MillisSince(start);
  return report;
}

SolveReport CombImpl(Backend& backend, const QuantalModel& model,
                     const BehavioralStrategy& nash,
                     const BehavioralStrategy& qne,
                     const CombOptions& options) {
  if (options.sweep_size < 1) throw GameError("sweep size must be >= 1");
  if (nash.player() != Player::kLeader || qne.player() != Player::kLeader) {
    throw DomainError("COMB combines leader strategies");
  }
  const auto start = Clock::now();
  SolveReport report;
  report.algorithm = "comb";
  double best_score = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < options.sweep_size; ++k) {
    const double alpha =
        options.sweep_size == 1 ? 0.0
                                : static_cast<double>(k) / (options.sweep_size - 1);
    std::vector<int> fallback;
    BehavioralStrategy mix = backend.Combine(qne, nash, alpha, &fallback);
    const BehavioralStrategy response = backend.Respond(mix, true, &model);
    const double u = backend.Utility(mix, response)[0];
    report.trace.push_back(
        {k, alpha, options.game_value ? u - *options.game_value : kNaN, kNaN,
         MillisSince(start)});
    // Strict improvement only, so ties keep the smaller alpha.
    if (u > best_score) {
      best_score = u;
      report.strategy = std::move(mix);
      report.tuned_param = alpha;
      report.fallback_infosets = std::move(fallback);
    }
  }
  report.final_strategy = report.strategy;
  report.iterations = options.sweep_size;
  report.metrics = backend.Evaluate(report.strategy, model, options.game_value);
  report.wall_ms = MillisSince(start);
  return report;
}

SolveReport RqrImpl(Backend& backend, const QuantalModel& model,
                    const RqrOptions& options) {
  if (options.phase2_iterations < 1 ||
      (!options.fixed_p && options.phase1_iterations < 1)) {
    throw GameError("RQR phase iterations must be >= 1");
  }
  if (options.fixed_p && !(*options.fixed_p >= 0.0 && *options.fixed_p <= 1.0)) {
    throw GameError("fixed p must lie in [0, 1]");
  }
  const auto start = Clock::now();
  SolveReport report;
  report.algorithm = "rqr";
  const double offset = options.game_value.value_or(0.0);
  const long trace_every = std::max(1L, options.trace_every);
  std::vector<double> values, reach;

  double p = options.p0;
  if (options.fixed_p) {
    p = *options.fixed_p;
  } else {
    Rng rng(options.seed);
    double step = options.step;
    const double decay =
        std::pow(2.0, -1.0 / static_cast<double>(options.phase1_iterations));
    RegretMatcher leader(backend.Uniform(Player::kLeader));
    double old_gain =
        LeaderCertificate(backend, leader.current(), true, model).utility -
        offset;
    for (long t = 1; t <= options.phase1_iterations; ++t) {
      const bool qr = UnitDraw(rng) < p;
      const BehavioralStrategy& response =
          backend.Respond(leader.current(), qr, &model);
      LeaderStep(backend, leader, response, static_cast<double>(t), values,
                 reach);
      const BehavioralStrategy quantal =
          backend.Respond(leader.current(), true, &model);
      const double gain = backend.Utility(leader.current(), quantal)[0] - offset;
      p = AdaptP(p, &step, decay, options.threshold, qr, old_gain, gain);
      old_gain = gain;
      if (options.record_trace && t % trace_every == 0) {
        report.trace.push_back({t, p, gain, kNaN, MillisSince(start)});
      }
    }
  }

  Rng rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  RegretMatcher leader(backend.Uniform(Player::kLeader));
  const long base = options.fixed_p ? 0 : options.phase1_iterations;
  for (long t = 1; t <= options.phase2_iterations; ++t) {
    const bool qr = UnitDraw(rng) < p;
    const BehavioralStrategy& response =
        backend.Respond(leader.current(), qr, &model);
    LeaderStep(backend, leader, response, static_cast<double>(t), values,
               reach);
    if (options.record_trace && t % trace_every == 0) {
      report.trace.push_back({base + t, p, kNaN, kNaN, MillisSince(start)});
    }
  }
  report.strategy = leader.Average();
  report.final_strategy = leader.current();
  report.iterations = base + options.phase2_iterations;
  report.tuned_param = p;
  report.certificate =
      LeaderCertificate(backend, report.strategy, true, model).epsilon;
  report.metrics = backend.Evaluate(report.strategy, model, options.game_value);
  report.wall_ms = MillisSince(start);
  return report;
}

}  // namespace

RegretMatcher::RegretMatcher(BehavioralStrategy uniform)
    : current_(std::move(uniform)),
      regret_(current_.flat().size(), 0.0),
      strategy_sum_(current_.flat().size(), 0.0) {}

void RegretMatcher::Update(std::span<const double> action_values,
                           std::span<const double> reach, double weight) {
  std::span<double> cur = current_.flat();
  for (int i = 0; i < current_.num_infosets(); ++i) {
    const int off = current_.offset(i);
    const int n = current_.num_actions(i);
    double v = 0.0;
    for (int a = 0; a < n; ++a) v += cur[off + a] * action_values[off + a];
    const double w = weight * reach[i];
    double positive = 0.0;
    for (int a = 0; a < n; ++a) {
      strategy_sum_[off + a] += w * cur[off + a];
      double& r = regret_[off + a];
      r = std::max(0.0, r + action_values[off + a] - v);
      positive += r;
    }
    for (int a = 0; a < n; ++a) {
      cur[off + a] = positive > 0.0 ? regret_[off + a] / positive : 1.0 / n;
    }
  }
  ++updates_;
}

BehavioralStrategy RegretMatcher::Average() const {
  BehavioralStrategy avg = current_;
  std::span<double> out = avg.flat();
  for (int i = 0; i < avg.num_infosets(); ++i) {
    const int off = avg.offset(i);
    const int n = avg.num_actions(i);
    double total = 0.0;
    for (int a = 0; a < n; ++a) total += strategy_sum_[off + a];
    for (int a = 0; a < n; ++a) {
      out[off + a] = total > 0.0 ? strategy_sum_[off + a] / total : 1.0 / n;
    }
  }
  return avg;
}

SolveReport SolveNash(const NormalFormGame& game, const SolverOptions& options) {
  NfgBackend backend(game);
  return NashImpl(backend, options);
}
SolveReport SolveNash(const ExtensiveFormGame& game,
                      const SolverOptions& options) {
  EfgBackend backend(game);
  return NashImpl(backend, options);
}

SolveReport SolveQne(const NormalFormGame& game, const QuantalModel& model,
                     const SolverOptions& options) {
  NfgBackend backend(game);
  return LearnAgainst(backend, model, true, options);
}
SolveReport SolveQne(const ExtensiveFormGame& game, const QuantalModel& model,
                     const SolverOptions& options) {
  EfgBackend backend(game);
  return LearnAgainst(backend, model, true, options);
}

SolveReport SolveCfrBr(const NormalFormGame& game, const QuantalModel& model,
                       const SolverOptions& options) {
  NfgBackend backend(game);
  return LearnAgainst(backend, model, false, options);
}
SolveReport SolveCfrBr(const ExtensiveFormGame& game, const QuantalModel& model,
                       const SolverOptions& options) {
  EfgBackend backend(game);
  return LearnAgainst(backend, model, false, options);
}

SolveReport SolveComb(const NormalFormGame& game, const QuantalModel& model,
                      const BehavioralStrategy& nash,
                      const BehavioralStrategy& qne,
                      const CombOptions& options) {
  nash.Validate(game);
  qne.Validate(game);
  NfgBackend backend(game);
  return CombImpl(backend, model, nash, qne, options);
}
SolveReport SolveComb(const ExtensiveFormGame& game, const QuantalModel& model,
                      const BehavioralStrategy& nash,
                      const BehavioralStrategy& qne,
                      const CombOptions& options) {
  nash.Validate(game);
  qne.Validate(game);
  EfgBackend backend(game);
  return CombImpl(backend, model, nash, qne, options);
}

BehavioralStrategy ConvexCombineEfg(const ExtensiveFormGame& game,
                                    const BehavioralStrategy& s1,
                                    const BehavioralStrategy& s2, double alpha,
                                    std::vector<int>* fallback) {
  if (s1.player() != s2.player()) {
    throw DomainError("cannot combine strategies of different players");
  }
  s1.Validate(game);
  s2.Validate(game);
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw GameError("combination weight must lie in [0, 1]");
  }
  if (alpha == 1.0) return s1;
  if (alpha == 0.0) return s2;
  const std::vector<double> r1 = InfosetOwnReach(game, s1);
  const std::vector<double> r2 = InfosetOwnReach(game, s2);
  BehavioralStrategy out = s1;
  for (int i = 0; i < out.num_infosets(); ++i) {
    const double w1 = r1[i] * alpha;
    const double w2 = r2[i] * (1.0 - alpha);
    const double den = w1 + w2;
    std::span<double> d = out.at(i);
    if (den <= 0.0) {
      std::fill(d.begin(), d.end(), 1.0 / d.size());
      if (fallback) fallback->push_back(i);
      continue;
    }
    for (int a = 0; a < static_cast<int>(d.size()); ++a) {
      d[a] = (w1 * s1.prob(i, a) + w2 * s2.prob(i, a)) / den;
    }
  }
  return out;
}

SolveReport SolveRqr(const NormalFormGame& game, const QuantalModel& model,
                     const RqrOptions& options) {
  NfgBackend backend(game);
  return RqrImpl(backend, model, options);
}
SolveReport SolveRqr(const ExtensiveFormGame& game, const QuantalModel& model,
                     const RqrOptions& options) {
  EfgBackend backend(game);
  return RqrImpl(backend, model, options);
}

double AdaptP(double p, double* step, double decay, double threshold,
              bool qr_drawn, double old_gain, double new_gain) {
  bool increased = false;
  bool decreased = false;
  if (old_gain > 0.0) {
    increased = new_gain > old_gain * threshold;
    decreased = new_gain < old_gain / threshold;
  } else if (old_gain < 0.0) {
    increased = new_gain > old_gain / threshold;
    decreased = new_gain < old_gain * threshold;
  } else {
    increased = new_gain > 0.0;
    decreased = new_gain < 0.0;
  }
  // A gain increase after a quantal response moves p towards the quantal
  // response; after a best response it moves p towards the best response.
  if (increased) {
    p += qr_drawn ? *step : -*step;
  } else if (decreased) {
    p += qr_drawn ? -*step : *step;
  }
  *step *= decay;
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace quantal
