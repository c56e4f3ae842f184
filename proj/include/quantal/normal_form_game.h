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

#ifndef QUANTAL_NORMAL_FORM_GAME_H_
#define QUANTAL_NORMAL_FORM_GAME_H_

#include <span>
#include <vector>

#include "quantal/common.h"

namespace quantal {

// Two-player bimatrix game. Rows are leader actions, columns are follower
// actions. Payoffs are stored row-major.
class NormalFormGame {
 public:
  // Builds a general-sum game. Both matrices must be rows x cols.
  NormalFormGame(int rows, int cols, std::vector<double> leader_payoffs,
                 std::vector<double> follower_payoffs);

  // Builds a zero-sum game; the follower receives the exact negation.
  static NormalFormGame ZeroSum(int rows, int cols,
                                std::vector<double> leader_payoffs);
  static NormalFormGame ZeroSum(
      const std::vector<std::vector<double>>& leader_payoffs);
  static NormalFormGame GeneralSum(
      const std::vector<std::vector<double>>& leader_payoffs,
      const std::vector<std::vector<double>>& follower_payoffs);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool zero_sum() const { return zero_sum_; }

  double leader_payoff(int r, int c) const { return leader_[r * cols_ + c]; }
  double follower_payoff(int r, int c) const {
    return follower_[r * cols_ + c];
  }
  double payoff(Player p, int r, int c) const {
    return p == Player::kLeader ? leader_payoff(r, c) : follower_payoff(r, c);
  }

  std::span<const double> leader_payoffs() const { return leader_; }
  std::span<const double> follower_payoffs() const { return follower_; }
  std::span<const double> payoffs(Player p) const {
    return p == Player::kLeader ? leader_payoffs() : follower_payoffs();
  }

  int num_actions(Player p) const {
    return p == Player::kLeader ? rows_ : cols_;
  }

  double min_payoff(Player p) const;
  double max_payoff(Player p) const;

 private:
  NormalFormGame(int rows, int cols, std::vector<double> leader,
                 std::vector<double> follower, bool zero_sum);

  int rows_;
  int cols_;
  std::vector<double> leader_;
  std::vector<double> follower_;
  bool zero_sum_;
};

// Expected payoff vector of each leader action against a follower strategy,
// i.e. U * follower.
std::vector<double> LeaderActionValues(const NormalFormGame& game,
                                       Player payoff_owner,
                                       std::span<const double> follower);

// Expected payoff of each follower action against a leader strategy, i.e.
// leader^T * U.
std::vector<double> FollowerActionValues(const NormalFormGame& game,
                                         Player payoff_owner,
                                         std::span<const double> leader);

}  // namespace quantal

#endif  // QUANTAL_NORMAL_FORM_GAME_H_
