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

#include "quantal/normal_form_game.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "quantal/kernels.h"

namespace quantal {

namespace {

std::vector<double> Flatten(const std::vector<std::vector<double>>& m,
                            int* rows, int* cols) {
  *rows = static_cast<int>(m.size());
  *cols = m.empty() ? 0 : static_cast<int>(m.front().size());
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(*rows) * *cols);
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != *cols) {
      throw GameError("payoff matrix rows have different lengths");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

std::vector<double> Negated(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](double x) { return -x; });
  return out;
}

}  // namespace

NormalFormGame::NormalFormGame(int rows, int cols, std::vector<double> leader,
                               std::vector<double> follower, bool zero_sum)
    : rows_(rows),
      cols_(cols),
      leader_(std::move(leader)),
      follower_(std::move(follower)),
      zero_sum_(zero_sum) {
  if (rows_ < 1 || cols_ < 1) {
    throw GameError("normal-form game needs at least one action per player");
  }
  const std::size_t n = static_cast<std::size_t>(rows_) * cols_;
  if (leader_.size() != n || follower_.size() != n) {
    throw GameError("payoff matrices must both be " + std::to_string(rows_) +
                    "x" + std::to_string(cols_));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(leader_[i]) || !std::isfinite(follower_[i])) {
      throw GameError("payoffs must be finite");
    }
    if (zero_sum_ && follower_[i] != -leader_[i]) {
      throw GameError("zero-sum game must have negated follower payoffs");
    }
  }
}

NormalFormGame::NormalFormGame(int rows, int cols,
                               std::vector<double> leader_payoffs,
                               std::vector<double> follower_payoffs)
    : NormalFormGame(rows, cols, std::move(leader_payoffs),
                     std::move(follower_payoffs), false) {}

NormalFormGame NormalFormGame::ZeroSum(int rows, int cols,
                                       std::vector<double> leader_payoffs) {
  std::vector<double> follower = Negated(leader_payoffs);
  return NormalFormGame(rows, cols, std::move(leader_payoffs),
                        std::move(follower), true);
}

NormalFormGame NormalFormGame::ZeroSum(
    const std::vector<std::vector<double>>& leader_payoffs) {
  int rows = 0, cols = 0;
  std::vector<double> flat = Flatten(leader_payoffs, &rows, &cols);
  return ZeroSum(rows, cols, std::move(flat));
}

NormalFormGame NormalFormGame::GeneralSum(
    const std::vector<std::vector<double>>& leader_payoffs,
    const std::vector<std::vector<double>>& follower_payoffs) {
  int rows = 0, cols = 0, frows = 0, fcols = 0;
  std::vector<double> leader = Flatten(leader_payoffs, &rows, &cols);
  std::vector<double> follower = Flatten(follower_payoffs, &frows, &fcols);
  if (rows != frows || cols != fcols) {
    throw GameError("payoff matrices have different shapes");
  }
  return NormalFormGame(rows, cols, std::move(leader), std::move(follower));
}

double NormalFormGame::min_payoff(Player p) const {
  auto m = payoffs(p);
  return *std::min_element(m.begin(), m.end());
}

double NormalFormGame::max_payoff(Player p) const {
  auto m = payoffs(p);
  return *std::max_element(m.begin(), m.end());
}

std::vector<double> LeaderActionValues(const NormalFormGame& game,
                                       Player payoff_owner,
                                       std::span<const double> follower) {
  if (static_cast<int>(follower.size()) != game.cols()) {
    throw DomainError("follower strategy has the wrong number of actions");
  }
  std::vector<double> out(game.rows());
  kernels::MatVec(game.payoffs(payoff_owner), game.rows(), game.cols(),
                  follower, out);
  return out;
}

std::vector<double> FollowerActionValues(const NormalFormGame& game,
                                         Player payoff_owner,
                                         std::span<const double> leader) {
  if (static_cast<int>(leader.size()) != game.rows()) {
    throw DomainError("leader strategy has the wrong number of actions");
  }
  std::vector<double> out(game.cols());
  kernels::VecMat(leader, game.payoffs(payoff_owner), game.rows(), game.cols(),
                  out);
  return out;
}

}  // namespace quantal
