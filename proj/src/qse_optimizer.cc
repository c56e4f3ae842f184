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

#include "quantal/qse_optimizer.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <utility>

#include "quantal/metrics.h"
#include "quantal/random.h"
#include "quantal/regret_solvers.h"
#include "quantal/responses.h"

namespace quantal {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kMinStep = 1e-16;
constexpr long kNashStartIterations = 20000;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// One projected gradient ascent problem over a product of simplices laid out
// like a BehavioralStrategy.
struct AscentProblem {
  std::function<double(const BehavioralStrategy&)> objective;
  std::function<void(const BehavioralStrategy&, std::span<double>)> gradient;
  // Called on the start point and every accepted iterate.
  std::function<void(const BehavioralStrategy&, double)> on_iterate;
};

void ProjectEach(BehavioralStrategy& s) {
  std::vector<double> buf;
  for (int i = 0; i < s.num_infosets(); ++i) {
    std::span<double> d = s.at(i);
    buf.assign(d.begin(), d.end());
    ProjectToSimplex(buf, d);
  }
}

LocalOptimum Ascend(const AscentProblem& problem, BehavioralStrategy x,
                    const GaConfig& config, int restart_id,
                    std::vector<GaTraceRow>* trace) {
  ProjectEach(x);
  const std::size_t dim = x.flat().size();
  std::vector<double> grad(dim);
  double f = problem.objective(x);
  if (problem.on_iterate) problem.on_iterate(x, f);
  double step = config.step_size_init;
  const double max_step = 1e3 * config.step_size_init;
  LocalOptimum result;
  BehavioralStrategy y = x;
  for (long it = 1; it <= config.max_iters; ++it) {
    problem.gradient(x, grad);
    double gnorm = 0.0;
    for (double g : grad) gnorm += g * g;
    gnorm = std::sqrt(gnorm);
    bool accepted = false;
    bool stationary = false;
    double fy = f;
    double move = 0.0;
    while (step >= kMinStep) {
      std::span<double> yf = y.flat();
      const std::span<const double> xf = x.flat();
      for (std::size_t k = 0; k < dim; ++k) yf[k] = xf[k] + step * grad[k];
      ProjectEach(y);
      double slope = 0.0;
      move = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const double d = yf[k] - xf[k];
        slope += grad[k] * d;
        move = std::max(move, std::abs(d));
      }
      if (move == 0.0) {
        stationary = true;
        break;
      }
      fy = problem.objective(y);
      if (fy >= f && fy >= f + config.armijo_c * slope) {
        accepted = true;
        break;
      }
      step *= config.armijo_backtrack_factor;
    }
    result.iterations = it;
    if (!accepted) {
      result.converged = true;
      break;
    }
    std::swap(x, y);
    f = fy;
    if (problem.on_iterate) problem.on_iterate(x, f);
    if (trace) trace->push_back({restart_id, it, f, step, gnorm});
    step = std::min(max_step, step / config.armijo_backtrack_factor);
    if (stationary || move < config.convergence_tol) {
      result.converged = true;
      break;
    }
  }
  result.strategy = std::move(x);
  result.objective = f;
  return result;
}

BehavioralStrategy RandomStart(const BehavioralStrategy& shape, Rng& rng) {
  BehavioralStrategy s = shape;
  for (int i = 0; i < s.num_infosets(); ++i) {
    const std::vector<double> d = DirichletOnes(rng, s.num_actions(i));
    std::copy(d.begin(), d.end(), s.at(i).begin());
  }
  return s;
}

std::vector<BehavioralStrategy> Starts(const BehavioralStrategy& nash,
                                       const GaConfig& config) {
  std::vector<BehavioralStrategy> starts{nash};
  Rng rng(config.seed);
  for (int r = 1; r < config.restarts; ++r) {
    starts.push_back(RandomStart(nash, rng));
  }
  return starts;
}

// Runs every start (in parallel when allowed) and keeps the best optimum;
// ties go to the lowest restart id.
SolveReport MultiStart(
    const std::function<AscentProblem()>& make_problem,
    const std::vector<BehavioralStrategy>& starts, const GaConfig& config) {
  const int n = static_cast<int>(starts.size());
  std::vector<LocalOptimum> optima(n);
  std::vector<std::vector<GaTraceRow>> traces(n);
#pragma omp parallel for schedule(dynamic) if (n > 1)
  for (int r = 0; r < n; ++r) {
    const AscentProblem problem = make_problem();
    optima[r] = Ascend(problem, starts[r], config, r,
                       config.record_trace ? &traces[r] : nullptr);
  }
  SolveReport report;
  int best = 0;
  for (int r = 0; r < n; ++r) {
    report.iterations += optima[r].iterations;
    if (optima[r].objective > optima[best].objective) best = r;
    report.ga_trace.insert(report.ga_trace.end(), traces[r].begin(),
                           traces[r].end());
  }
  report.strategy = optima[best].strategy;
  report.final_strategy = optima[best].strategy;
  report.converged = optima[best].converged;
  report.local_optima = std::move(optima);
  return report;
}

void FiniteDifference(const std::function<double(const BehavioralStrategy&)>& f,
                      const BehavioralStrategy& x, double h,
                      std::span<double> grad) {
  BehavioralStrategy probe = x;
  std::span<double> p = probe.flat();
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double orig = p[k];
    p[k] = orig + h;
    const double up = f(probe);
    p[k] = orig - h;
    const double down = f(probe);
    p[k] = orig;
    grad[k] = (up - down) / (2.0 * h);
  }
}

}  // namespace

void GaConfig::Validate() const {
  if (max_iters < 1 || !(step_size_init > 0.0) ||
      !(armijo_backtrack_factor > 0.0 && armijo_backtrack_factor < 1.0) ||
      !(armijo_c > 0.0 && armijo_c < 1.0) || !(convergence_tol > 0.0) ||
      restarts < 1 || !(finite_diff_h > 0.0)) {
    throw GameError("invalid gradient-ascent configuration");
  }
}

void ProjectToSimplex(std::span<const double> v, std::span<double> out) {
  const std::size_t n = v.size();
  if (n == 0 || out.size() != n) {
    throw GameError("simplex projection needs matching nonempty spans");
  }
  // Michelot: repeatedly drop coordinates that fall below the threshold.
  std::vector<char> active(n, 1);
  std::size_t count = n;
  double tau = 0.0;
  while (true) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (active[i]) sum += v[i];
    }
    tau = (sum - 1.0) / static_cast<double>(count);
    bool removed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (active[i] && v[i] <= tau) {
        active[i] = 0;
        --count;
        removed = true;
      }
    }
    if (!removed || count == 0) break;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = active[i] ? v[i] - tau : 0.0;
  }
}

std::vector<double> ProjectToSimplex(std::span<const double> v) {
  std::vector<double> out(v.size());
  ProjectToSimplex(v, out);
  return out;
}

double QseObjectiveNfg(const NormalFormGame& game, std::span<const double> x,
                       const QuantalModel& model) {
  const std::vector<double> h = FollowerActionValues(game, Player::kLeader, x);
  const std::vector<double> g =
      FollowerActionValues(game, Player::kFollower, x);
  const std::vector<double> w = model.Respond(g);
  double f = 0.0;
  for (std::size_t b = 0; b < w.size(); ++b) f += h[b] * w[b];
  return f;
}

void QseGradientNfg(const NormalFormGame& game, std::span<const double> x,
                    const QuantalModel& model, std::span<double> grad) {
  const std::vector<double> h = FollowerActionValues(game, Player::kLeader, x);
  const std::vector<double> g =
      FollowerActionValues(game, Player::kFollower, x);
  const std::vector<double> w = model.Respond(g);
  std::vector<double> s(w.size());
  model.LogGeneratorSlope(g, s);
  double f = 0.0;
  for (std::size_t b = 0; b < w.size(); ++b) f += h[b] * w[b];
  std::vector<double> z(w.size());
  for (std::size_t b = 0; b < w.size(); ++b) z[b] = s[b] * w[b] * (h[b] - f);
  const std::vector<double> direct = LeaderActionValues(game, Player::kLeader, w);
  const std::vector<double> through =
      LeaderActionValues(game, Player::kFollower, z);
  for (std::size_t r = 0; r < grad.size(); ++r) {
    grad[r] = direct[r] + through[r];
  }
}

SolveReport SolveQseGaNfg(const NormalFormGame& game, const QuantalModel& model,
                          const GaConfig& config,
                          const std::optional<BehavioralStrategy>& nash_start) {
  config.Validate();
  const auto start = Clock::now();
  BehavioralStrategy nash;
  if (nash_start) {
    nash_start->Validate(game);
    nash = *nash_start;
  } else {
    SolverOptions options;
    options.iterations = kNashStartIterations;
    nash = SolveNash(game, options).strategy;
  }
  auto make = [&]() {
    AscentProblem p;
    p.objective = [&](const BehavioralStrategy& x) {
      return QseObjectiveNfg(game, x.flat(), model);
    };
    p.gradient = [&](const BehavioralStrategy& x, std::span<double> g) {
      QseGradientNfg(game, x.flat(), model, g);
    };
    return p;
  };
  SolveReport report = MultiStart(make, Starts(nash, config), config);
  report.algorithm = "ga";
  report.metrics = Evaluate(game, report.strategy, model);
  report.wall_ms = MillisSince(start);
  return report;
}

double QseObjectiveEfg(const ExtensiveFormGame& game,
                       const BehavioralStrategy& leader,
                       const QuantalModel& model) {
  leader.Validate(game);
  ResponseEngine engine(game);
  engine.Respond(leader, ResponseEngine::Rule::kQuantal, &model);
  return engine.values()[0];
}

SolveReport SolveQseGaEfg(const ExtensiveFormGame& game,
                          const QuantalModel& model, const GaConfig& config,
                          const std::optional<BehavioralStrategy>& nash_start) {
  config.Validate();
  const auto start = Clock::now();
  BehavioralStrategy nash;
  if (nash_start) {
    nash_start->Validate(game);
    nash = *nash_start;
  } else {
    SolverOptions options;
    options.iterations = kNashStartIterations;
    nash = SolveNash(game, options).strategy;
  }
  auto make = [&]() {
    // Each restart owns its engine; evaluations skip validation because
    // finite-difference probes step slightly off the simplex.
    auto engine = std::make_shared<ResponseEngine>(game);
    AscentProblem p;
    p.objective = [engine, &model](const BehavioralStrategy& x) {
      engine->Respond(x, ResponseEngine::Rule::kQuantal, &model);
      return engine->values()[0];
    };
    const double h = config.finite_diff_h;
    p.gradient = [objective = p.objective, h](const BehavioralStrategy& x,
                                              std::span<double> g) {
      FiniteDifference(objective, x, h, g);
    };
    return p;
  };
  SolveReport report = MultiStart(make, Starts(nash, config), config);
  report.algorithm = "ga";
  report.metrics = Evaluate(game, report.strategy, model);
  report.wall_ms = MillisSince(start);
  return report;
}

SolveReport BestNeSearch(const NormalFormGame& game, const QuantalModel& model,
                         const GaConfig& config,
                         const BehavioralStrategy& nash_start, double value,
                         double tolerance) {
  config.Validate();
  if (!game.zero_sum()) {
    throw GameError("NE-constrained search is defined for zero-sum games");
  }
  nash_start.Validate(game);
  const auto start = Clock::now();
  const double floor = value - tolerance;
  auto guaranteed = [&](std::span<const double> x, int* argmin) {
    const std::vector<double> cols =
        FollowerActionValues(game, Player::kLeader, x);
    const auto it = std::min_element(cols.begin(), cols.end());
    if (argmin) *argmin = static_cast<int>(it - cols.begin());
    return *it;
  };
  const int n = std::max(1, config.restarts);
  std::vector<BehavioralStrategy> starts = Starts(nash_start, config);
  std::vector<std::optional<std::pair<double, BehavioralStrategy>>> best(n);
  std::vector<LocalOptimum> optima(n);
  std::vector<std::vector<GaTraceRow>> traces(n);
#pragma omp parallel for schedule(dynamic) if (n > 1)
  for (int r = 0; r < n; ++r) {
    AscentProblem p;
    p.objective = [&](const BehavioralStrategy& x) {
      const double violation = std::max(0.0, floor - guaranteed(x.flat(), nullptr));
      return QseObjectiveNfg(game, x.flat(), model) -
             kNeSearchPenalty * violation;
    };
    p.gradient = [&](const BehavioralStrategy& x, std::span<double> g) {
      QseGradientNfg(game, x.flat(), model, g);
      int col = 0;
      if (guaranteed(x.flat(), &col) < floor) {
        for (int row = 0; row < game.rows(); ++row) {
          g[row] += kNeSearchPenalty * game.leader_payoff(row, col);
        }
      }
    };
    auto& slot = best[r];
    p.on_iterate = [&](const BehavioralStrategy& x, double) {
      if (guaranteed(x.flat(), nullptr) < floor) return;
      const double f = QseObjectiveNfg(game, x.flat(), model);
      if (!slot || f > slot->first) slot.emplace(f, x);
    };
    optima[r] = Ascend(p, starts[r], config, r,
                       config.record_trace ? &traces[r] : nullptr);
  }
  SolveReport report;
  report.algorithm = "best_ne";
  int chosen = -1;
  for (int r = 0; r < n; ++r) {
    report.iterations += optima[r].iterations;
    report.ga_trace.insert(report.ga_trace.end(), traces[r].begin(),
                           traces[r].end());
    if (best[r] && (chosen < 0 || best[r]->first > best[chosen]->first)) {
      chosen = r;
    }
  }
  report.local_optima = std::move(optima);
  if (chosen >= 0) {
    report.strategy = best[chosen]->second;
    report.feasible = true;
  } else {
    report.strategy = nash_start;
    report.feasible = false;
  }
  report.final_strategy = report.strategy;
  report.converged = report.feasible;
  report.metrics = Evaluate(game, report.strategy, model, value);
  report.wall_ms = MillisSince(start);
  return report;
}

}  // namespace quantal
