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

#ifndef QUANTAL_GAME_ZOO_H_
#define QUANTAL_GAME_ZOO_H_

#include <cstdint>
#include <string>
#include <vector>

#include "quantal/extensive_form_game.h"
#include "quantal/normal_form_game.h"
#include "quantal/qse_optimizer.h"
#include "quantal/quantal_model.h"

namespace quantal::zoo {

// Small named games. Matrices list the leader's payoffs; zero-sum unless
// noted.
NormalFormGame BadQne();           // [[-6, 9, 9], [3, 0, 2]]
NormalFormGame Game1();            // [[-4, -5, 8, -4], [-5, -4, -4, 8]]
NormalFormGame Game2();            // [[-2, 8], [-2.2, -2.5]]
// Follower payoffs [[b, a], [c, a]]; the leader gets the negation.
NormalFormGame Game3(double a, double b, double c);
NormalFormGame MatchingPennies();  // [[1, -1], [-1, 1]]
NormalFormGame RockPaperScissors();
NormalFormGame TwoQseGame();       // [[0, 10, 0], [0, 0, 10]]
// General-sum, both players get [[1, 0], [0, 1]].
NormalFormGame Coordination();

// Integer payoffs drawn uniformly from [-9, 10]. General-sum games draw the
// follower matrix after the leader's.
NormalFormGame RandomNfg(int rows, int cols, std::uint64_t seed,
                         bool zero_sum = true);

// Zero-sum game tree where the players alternate for l moves each with b
// actions per decision. Every edge moves a running value up or down by one;
// terminals pay the running value to the leader. A player sees her own
// actions and only (action mod o) of the opponent's.
ExtensiveFormGame RandomEfg(int b, int o, int l, std::uint64_t seed);

struct EfgSetParams {
  int b, o, l;
};
// Parameter sets 1-4 of the random extensive-form benchmark.
EfgSetParams RandomEfgSet(int set);

// The single leader decision followed by a follower decision that does not
// observe it.
ExtensiveFormGame NormalFormAsExtensive(const NormalFormGame& game);

// True when gradient ascent gains no more than `tol` over the Nash strategy
// against `model`.
bool DiscardDegenerate(const NormalFormGame& game, const QuantalModel& model,
                       double tol = 1e-6, const GaConfig& config = {});
bool DiscardDegenerate(const ExtensiveFormGame& game, const QuantalModel& model,
                       double tol = 1e-6, const GaConfig& config = {});

// General-sum families. Action i of both players is the i-th time, vote or
// claim.
//
// Grab the dollar: grabbing first pays `high` to the grabber and `mid` to the
// other player, grabbing simultaneously pays `low` to both.
NormalFormGame GrabTheDollar(int n, double high = 10, double low = 0,
                             double mid = 5);
// Majority voting between two voters over n candidates: the candidate with
// more votes wins; ties go to the lower index. Each player receives her
// utility for the winner.
NormalFormGame MajorityVoting(const std::vector<double>& leader_utility,
                              const std::vector<double>& follower_utility);
// Traveler's dilemma with claims 2, 3, ..., n + 1: equal claims are paid;
// otherwise both are paid the lower claim, plus `bonus` to the lower claimant
// and minus `bonus` to the other.
NormalFormGame TravelersDilemma(int n, double bonus = 2);
// War of attrition over concession times 0..n-1 with unit decrement per time
// step: the later player wins her valuation, both pay the earlier time, equal
// times split the valuations.
NormalFormGame WarOfAttrition(int n, double leader_value, double follower_value);

enum class GamutFamily {
  kGrabTheDollar,
  kMajorityVoting,
  kTravelersDilemma,
  kWarOfAttrition
};
GamutFamily GamutFamilyFromName(const std::string& name);
const char* GamutFamilyName(GamutFamily family);
// Seeded instance: grab-the-dollar draws mid in [1, 9], majority voting draws
// candidate utilities in [-9, 10], war of attrition draws valuations in
// [1, 2n]; traveler's dilemma ignores the seed.
NormalFormGame GamutStyle(GamutFamily family, int n, std::uint64_t seed);

// Kuhn-style poker with a deck of `deck_size` distinct cards, ante 1, one bet
// of 1 and a single betting round.
ExtensiveFormGame OneCardPoker(int deck_size);

// Leduc hold'em: ranks J, Q, K with two suits each, ante 1, raises of 2 in the
// first and 4 in the second round, at most two raises per round. Infosets
// see ranks only.
ExtensiveFormGame LeducHoldem();

// Goofspiel with point cards 1..k revealed in ascending order. Each turn the
// leader bids, then the follower bids without seeing it; bids are revealed
// afterwards. The higher bid takes the point card, ties discard it. The
// leader receives her points minus the follower's. The last turn is forced.
ExtensiveFormGame Goofspiel(int k);

enum class ReductionVariant { kZeroSum, kGeneralSum };

// Game built from a partition instance `items`. Chance picks one of 2n
// subgames uniformly: for every item an embedded normal-form subtree
// (TwoQseGame, or Coordination for the general-sum variant) and a partition
// subtree. The leader's item-i infoset spans the roots of both subtrees of
// item i, so her commitment in the embedded game also places the item: the
// first action puts it in subset 1. The follower's partition infoset spans
// all partition subtrees; action a1 pays x_i to the leader for items placed
// in subset 1, a2 pays x_i for items in subset 2. Utilities are scaled by 2n
// so the follower's counterfactual values equal the unscaled payoffs.
ExtensiveFormGame PartitionReductionGame(const std::vector<int>& items,
                                         ReductionVariant variant);

// Leader utility of the reduction game when she commits to the first action
// with probability sigma[i] in item i's infoset. Closed-form evaluation used by
// brute-force scans.
double PartitionReductionValue(const std::vector<int>& items,
                               ReductionVariant variant,
                               const std::vector<double>& sigma,
                               const QuantalModel& model);

// True iff the multiset can be split into two parts of equal sum.
bool PartitionSolvable(const std::vector<int>& items);

}  // namespace quantal::zoo

#endif  // QUANTAL_GAME_ZOO_H_
