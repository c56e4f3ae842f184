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

#include "quantal/game_zoo.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <type_traits>

#include "quantal/metrics.h"
#include "quantal/random.h"
#include "quantal/regret_solvers.h"

namespace quantal::zoo {

namespace {

constexpr long kReferenceNashIterations = 20000;

NormalFormGame Symmetric(int n, const std::function<double(int, int)>& payoff) {
  std::vector<double> leader(n * n), follower(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      leader[i * n + j] = payoff(i, j);
      follower[i * n + j] = payoff(j, i);
    }
  }
  return NormalFormGame(n, n, std::move(leader), std::move(follower));
}

void RequirePositive(int n, const char* what) {
  if (n < 1) throw GameError(std::string(what) + " must be positive");
}

}  // namespace

NormalFormGame BadQne() { return NormalFormGame::ZeroSum({{-6, 9, 9}, {3, 0, 2}}); }

NormalFormGame Game1() {
  return NormalFormGame::ZeroSum({{-4, -5, 8, -4}, {-5, -4, -4, 8}});
}

NormalFormGame Game2() {
  return NormalFormGame::ZeroSum({{-2, 8}, {-2.2, -2.5}});
}

NormalFormGame Game3(double a, double b, double c) {
  return NormalFormGame::ZeroSum({{-b, -a}, {-c, -a}});
}

NormalFormGame MatchingPennies() {
  return NormalFormGame::ZeroSum({{1, -1}, {-1, 1}});
}

NormalFormGame RockPaperScissors() {
  return NormalFormGame::ZeroSum({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
}

NormalFormGame TwoQseGame() {
  return NormalFormGame::ZeroSum({{0, 10, 0}, {0, 0, 10}});
}

NormalFormGame Coordination() {
  return NormalFormGame::GeneralSum({{1, 0}, {0, 1}}, {{1, 0}, {0, 1}});
}

NormalFormGame RandomNfg(int rows, int cols, std::uint64_t seed,
                         bool zero_sum) {
  RequirePositive(rows, "rows");
  RequirePositive(cols, "cols");
  Rng rng(seed);
  std::vector<double> leader(static_cast<std::size_t>(rows) * cols);
  for (double& v : leader) v = IntDraw(rng, -9, 10);
  if (zero_sum) return NormalFormGame::ZeroSum(rows, cols, std::move(leader));
  std::vector<double> follower(leader.size());
  for (double& v : follower) v = IntDraw(rng, -9, 10);
  return NormalFormGame(rows, cols, std::move(leader), std::move(follower));
}

ExtensiveFormGame RandomEfg(int b, int o, int l, std::uint64_t seed) {
  RequirePositive(b, "branching factor");
  RequirePositive(o, "observation count");
  if (l < 0) throw GameError("sequence length must be nonnegative");
  Rng rng(seed);
  ExtensiveFormGameBuilder builder(true);
  const int depth = 2 * l;
  // views[p] is what player p has seen along the current path.
  std::function<void(int, int, int, int, std::array<std::string, 2>)> grow =
      [&](int parent, int action, int d, int value,
          std::array<std::string, 2> views) {
        if (d == depth) {
          builder.AddTerminal(parent, action, value);
          return;
        }
        const Player p = d % 2 == 0 ? Player::kLeader : Player::kFollower;
        const int me = PlayerIndex(p);
        const int id = builder.AddDecision(parent, action, p, views[me], b);
        for (int a = 0; a < b; ++a) {
          const int step = (rng() & 1) ? 1 : -1;
          std::array<std::string, 2> next = views;
          next[me] += "a" + std::to_string(a);
          next[1 - me] += "o" + std::to_string(a % o);
          grow(id, a, d + 1, value + step, std::move(next));
        }
      };
  grow(-1, 0, 0, 0, {"", ""});
  return builder.Build();
}

EfgSetParams RandomEfgSet(int set) {
  switch (set) {
    case 1: return {3, 2, 1};
    case 2: return {3, 2, 2};
    case 3: return {5, 3, 2};
    case 4: return {5, 3, 3};
    default: throw GameError("random EFG sets are numbered 1 to 4");
  }
}

ExtensiveFormGame NormalFormAsExtensive(const NormalFormGame& game) {
  ExtensiveFormGameBuilder builder(game.zero_sum());
  const int root =
      builder.AddDecision(-1, 0, Player::kLeader, "root", game.rows());
  for (int r = 0; r < game.rows(); ++r) {
    const int f =
        builder.AddDecision(root, r, Player::kFollower, "column", game.cols());
    for (int c = 0; c < game.cols(); ++c) {
      builder.AddTerminal(f, c, game.leader_payoff(r, c),
                          game.follower_payoff(r, c));
    }
  }
  return builder.Build();
}

template <typename Game>
bool DiscardDegenerateImpl(const Game& game, const QuantalModel& model,
                           double tol, const GaConfig& config) {
  SolverOptions options;
  options.iterations = kReferenceNashIterations;
  const SolveReport nash = SolveNash(game, options);
  const double nash_eu = Evaluate(game, nash.strategy, model).eu_vs_qr;
  SolveReport ga;
  if constexpr (std::is_same_v<Game, NormalFormGame>) {
    ga = SolveQseGaNfg(game, model, config, nash.strategy);
  } else {
    ga = SolveQseGaEfg(game, model, config, nash.strategy);
  }
  return std::abs(ga.metrics.eu_vs_qr - nash_eu) <= tol;
}

bool DiscardDegenerate(const NormalFormGame& game, const QuantalModel& model,
                       double tol, const GaConfig& config) {
  return DiscardDegenerateImpl(game, model, tol, config);
}
bool DiscardDegenerate(const ExtensiveFormGame& game, const QuantalModel& model,
                       double tol, const GaConfig& config) {
  return DiscardDegenerateImpl(game, model, tol, config);
}

NormalFormGame GrabTheDollar(int n, double high, double low, double mid) {
  RequirePositive(n, "action count");
  return Symmetric(n, [=](int i, int j) {
    if (i == j) return low;
    return i < j ? high : mid;
  });
}

NormalFormGame MajorityVoting(const std::vector<double>& leader_utility,
                              const std::vector<double>& follower_utility) {
  const int n = static_cast<int>(leader_utility.size());
  RequirePositive(n, "candidate count");
  if (static_cast<int>(follower_utility.size()) != n) {
    throw GameError("both voters need a utility for every candidate");
  }
  std::vector<double> leader(n * n), follower(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // One vote each: agreement elects the candidate, a 1-1 tie goes to the
      // higher-priority (lower index) candidate.
      const int winner = std::min(i, j);
      leader[i * n + j] = leader_utility[winner];
      follower[i * n + j] = follower_utility[winner];
    }
  }
  return NormalFormGame(n, n, std::move(leader), std::move(follower));
}

NormalFormGame TravelersDilemma(int n, double bonus) {
  RequirePositive(n, "action count");
  return Symmetric(n, [=](int i, int j) {
    const double mine = 2 + i;
    const double theirs = 2 + j;
    if (i == j) return mine;
    return i < j ? mine + bonus : theirs - bonus;
  });
}

NormalFormGame WarOfAttrition(int n, double leader_value,
                              double follower_value) {
  RequirePositive(n, "action count");
  std::vector<double> leader(n * n), follower(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double t = std::min(i, j);
      double l = -t, f = -t;
      if (i < j) {
        f += follower_value;
      } else if (j < i) {
        l += leader_value;
      } else {
        l += leader_value / 2;
        f += follower_value / 2;
      }
      leader[i * n + j] = l;
      follower[i * n + j] = f;
    }
  }
  return NormalFormGame(n, n, std::move(leader), std::move(follower));
}

GamutFamily GamutFamilyFromName(const std::string& name) {
  if (name == "grab_the_dollar") return GamutFamily::kGrabTheDollar;
  if (name == "majority_voting") return GamutFamily::kMajorityVoting;
  if (name == "travelers_dilemma") return GamutFamily::kTravelersDilemma;
  if (name == "war_of_attrition") return GamutFamily::kWarOfAttrition;
  throw GameError("unknown game family '" + name + "'");
}

const char* GamutFamilyName(GamutFamily family) {
  switch (family) {
    case GamutFamily::kGrabTheDollar: return "grab_the_dollar";
    case GamutFamily::kMajorityVoting: return "majority_voting";
    case GamutFamily::kTravelersDilemma: return "travelers_dilemma";
    case GamutFamily::kWarOfAttrition: return "war_of_attrition";
  }
  return "";
}

NormalFormGame GamutStyle(GamutFamily family, int n, std::uint64_t seed) {
  RequirePositive(n, "action count");
  Rng rng(seed);
  switch (family) {
    case GamutFamily::kGrabTheDollar:
      return GrabTheDollar(n, 10, 0, IntDraw(rng, 1, 9));
    case GamutFamily::kMajorityVoting: {
      std::vector<double> l(n), f(n);
      for (double& v : l) v = IntDraw(rng, -9, 10);
      for (double& v : f) v = IntDraw(rng, -9, 10);
      return MajorityVoting(l, f);
    }
    case GamutFamily::kTravelersDilemma:
      return TravelersDilemma(n, 2);
    case GamutFamily::kWarOfAttrition: {
      const double vl = IntDraw(rng, 1, 2 * n);
      const double vf = IntDraw(rng, 1, 2 * n);
      return WarOfAttrition(n, vl, vf);
    }
  }
  throw GameError("unknown game family");
}

ExtensiveFormGame OneCardPoker(int deck_size) {
  if (deck_size < 2) throw GameError("one-card poker needs at least 2 cards");
  const int k = deck_size;
  ExtensiveFormGameBuilder builder(true);
  const int deal = builder.AddChance(-1, 0, std::vector<double>(k, 1.0 / k));
  for (int lc = 0; lc < k; ++lc) {
    const int second =
        builder.AddChance(deal, lc, std::vector<double>(k - 1, 1.0 / (k - 1)));
    for (int slot = 0; slot < k - 1; ++slot) {
      const int fc = slot < lc ? slot : slot + 1;
      const double sign = lc > fc ? 1.0 : -1.0;
      const std::string lk = "L" + std::to_string(lc);
      const std::string fk = "F" + std::to_string(fc);
      const int root = builder.AddDecision(second, slot, Player::kLeader, lk, 2,
                                           {"check", "bet"});
      // Check: the follower may check (showdown for the ante) or bet.
      const int fcheck = builder.AddDecision(root, 0, Player::kFollower,
                                             fk + ":c", 2, {"check", "bet"});
      builder.AddTerminal(fcheck, 0, sign);
      const int lcall = builder.AddDecision(fcheck, 1, Player::kLeader,
                                            lk + ":cb", 2, {"fold", "call"});
      builder.AddTerminal(lcall, 0, -1.0);
      builder.AddTerminal(lcall, 1, 2.0 * sign);
      // Bet: the follower folds or calls.
      const int fbet = builder.AddDecision(root, 1, Player::kFollower,
                                           fk + ":b", 2, {"fold", "call"});
      builder.AddTerminal(fbet, 0, 1.0);
      builder.AddTerminal(fbet, 1, 2.0 * sign);
    }
  }
  return builder.Build();
}

namespace {

struct LeducBuilder {
  ExtensiveFormGameBuilder builder{true};
  static constexpr int kCards = 6;
  static int Rank(int card) { return card / 2; }

  // Leader's utility at showdown.
  static double Showdown(int lc, int fc, int pub, double pot_each) {
    const bool lpair = Rank(lc) == Rank(pub);
    const bool fpair = Rank(fc) == Rank(pub);
    if (lpair != fpair) return lpair ? pot_each : -pot_each;
    if (Rank(lc) == Rank(fc)) return 0.0;
    return Rank(lc) > Rank(fc) ? pot_each : -pot_each;
  }

  std::string Key(int player, int lc, int fc, int pub,
                  const std::string& history) const {
    const int card = player == 0 ? lc : fc;
    std::string key = std::to_string(Rank(card));
    if (pub >= 0) key += ":" + std::to_string(Rank(pub));
    return key + ":" + history;
  }

  // One betting round. contrib are the players' total stakes, `to_act` the
  // player to move, `raises` the raises so far in this round, `acted`
  // whether both players have moved.
  void Round(int parent, int action, int round, int lc, int fc, int pub,
             std::array<double, 2> contrib, int to_act, int raises,
             int moves, const std::string& history) {
    const double raise_size = round == 0 ? 2.0 : 4.0;
    const bool facing = contrib[to_act] < contrib[1 - to_act];
    std::vector<std::string> labels;
    if (facing) labels.push_back("fold");
    labels.push_back(facing ? "call" : "check");
    if (raises < 2) labels.push_back("raise");
    const Player p = to_act == 0 ? Player::kLeader : Player::kFollower;
    const int id =
        builder.AddDecision(parent, action, p, Key(to_act, lc, fc, pub, history),
                            static_cast<int>(labels.size()), labels);
    for (int a = 0; a < static_cast<int>(labels.size()); ++a) {
      const std::string& l = labels[a];
      if (l == "fold") {
        const double loss = contrib[to_act];
        builder.AddTerminal(id, a, to_act == 0 ? -loss : loss);
      } else if (l == "call" || l == "check") {
        std::array<double, 2> c = contrib;
        c[to_act] = c[1 - to_act];
        const std::string h = history + (l == "call" ? "c" : "k");
        if (l == "call" || moves >= 1) {
          EndRound(id, a, round, lc, fc, pub, c, h);
        } else {
          Round(id, a, round, lc, fc, pub, c, 1 - to_act, raises, moves + 1, h);
        }
      } else {
        std::array<double, 2> c = contrib;
        c[to_act] = c[1 - to_act] + raise_size;
        Round(id, a, round, lc, fc, pub, c, 1 - to_act, raises + 1, moves + 1,
              history + "r");
      }
    }
  }

  void EndRound(int parent, int action, int round, int lc, int fc, int pub,
                std::array<double, 2> contrib, const std::string& history) {
    if (round == 1) {
      builder.AddTerminal(parent, action, Showdown(lc, fc, pub, contrib[0]));
      return;
    }
    std::vector<int> remaining;
    for (int c = 0; c < kCards; ++c) {
      if (c != lc && c != fc) remaining.push_back(c);
    }
    const int n = static_cast<int>(remaining.size());
    const int chance =
        builder.AddChance(parent, action, std::vector<double>(n, 1.0 / n));
    for (int i = 0; i < n; ++i) {
      Round(chance, i, 1, lc, fc, remaining[i], contrib, 0, 0, 0,
            history + "/");
    }
  }

  ExtensiveFormGame Build() {
    const int deal =
        builder.AddChance(-1, 0, std::vector<double>(kCards, 1.0 / kCards));
    for (int lc = 0; lc < kCards; ++lc) {
      const int second = builder.AddChance(
          deal, lc, std::vector<double>(kCards - 1, 1.0 / (kCards - 1)));
      for (int slot = 0; slot < kCards - 1; ++slot) {
        const int fc = slot < lc ? slot : slot + 1;
        Round(second, slot, 0, lc, fc, -1, {1.0, 1.0}, 0, 0, 0, "");
      }
    }
    return builder.Build();
  }
};

}  // namespace

ExtensiveFormGame LeducHoldem() {
  LeducBuilder b;
  return b.Build();
}

ExtensiveFormGame Goofspiel(int k) {
  RequirePositive(k, "card count");
  ExtensiveFormGameBuilder builder(true);
  // Cards are 1..k; hands are bitmasks over card - 1.
  std::function<void(int, int, int, unsigned, unsigned, int, std::string)>
      turn = [&](int parent, int action, int t, unsigned lhand,
                 unsigned fhand, int diff, std::string history) {
        if (t == k - 1) {
          // One card left each: the last turn is forced.
          const int lb = std::countr_zero(lhand) + 1;
          const int fb = std::countr_zero(fhand) + 1;
          const int point = t + 1;
          const int final_diff =
              diff + (lb > fb ? point : 0) - (fb > lb ? point : 0);
          builder.AddTerminal(parent, action, final_diff);
          return;
        }
        std::vector<int> lbids, fbids;
        for (int c = 0; c < k; ++c) {
          if (lhand >> c & 1u) lbids.push_back(c + 1);
          if (fhand >> c & 1u) fbids.push_back(c + 1);
        }
        std::vector<std::string> llabels, flabels;
        for (int v : lbids) llabels.push_back("bid" + std::to_string(v));
        for (int v : fbids) flabels.push_back("bid" + std::to_string(v));
        const int lid = builder.AddDecision(
            parent, action, Player::kLeader, history,
            static_cast<int>(lbids.size()), llabels);
        for (int i = 0; i < static_cast<int>(lbids.size()); ++i) {
          const int fid = builder.AddDecision(
              lid, i, Player::kFollower, history,
              static_cast<int>(fbids.size()), flabels);
          for (int j = 0; j < static_cast<int>(fbids.size()); ++j) {
            const int lb = lbids[i], fb = fbids[j];
            const int point = t + 1;
            const int next_diff =
                diff + (lb > fb ? point : 0) - (fb > lb ? point : 0);
            turn(fid, j, t + 1, lhand & ~(1u << (lb - 1)),
                 fhand & ~(1u << (fb - 1)), next_diff,
                 history + std::to_string(lb) + "-" + std::to_string(fb) + ";");
          }
        }
      };
  const unsigned full = (1u << k) - 1u;
  turn(-1, 0, 0, full, full, 0, "");
  return builder.Build();
}

namespace {

NormalFormGame EmbeddedGame(ReductionVariant variant) {
  return variant == ReductionVariant::kZeroSum ? TwoQseGame() : Coordination();
}

void CheckItems(const std::vector<int>& items) {
  if (items.empty()) throw GameError("partition instance needs items");
  for (int x : items) {
    if (x <= 0) throw GameError("partition items must be positive");
  }
}

}  // namespace

ExtensiveFormGame PartitionReductionGame(const std::vector<int>& items,
                                         ReductionVariant variant) {
  CheckItems(items);
  const int n = static_cast<int>(items.size());
  const double scale = 2.0 * n;
  const NormalFormGame nfg = EmbeddedGame(variant);
  if (nfg.rows() != 2) throw GameError("embedded game needs two leader rows");
  const bool zero_sum = variant == ReductionVariant::kZeroSum;
  ExtensiveFormGameBuilder builder(zero_sum);
  const int root =
      builder.AddChance(-1, 0, std::vector<double>(2 * n, 1.0 / (2 * n)));
  for (int i = 0; i < n; ++i) {
    const std::string item = "item" + std::to_string(i);
    // Embedded normal-form subtree.
    const int nfg_root = builder.AddDecision(root, 2 * i, Player::kLeader,
                                             item, 2, {"first", "second"});
    for (int r = 0; r < 2; ++r) {
      const int f = builder.AddDecision(nfg_root, r, Player::kFollower,
                                        item + ":nfg", nfg.cols());
      for (int c = 0; c < nfg.cols(); ++c) {
        builder.AddTerminal(f, c, scale * nfg.leader_payoff(r, c),
                            scale * nfg.follower_payoff(r, c));
      }
    }
    // Partition subtree; same leader infoset.
    const int part_root = builder.AddDecision(root, 2 * i + 1, Player::kLeader,
                                              item, 2, {"first", "second"});
    for (int side = 0; side < 2; ++side) {
      const int f = builder.AddDecision(part_root, side, Player::kFollower,
                                        "partition", 2, {"a1", "a2"});
      for (int a = 0; a < 2; ++a) {
        const double u = side == a ? scale * items[i] : 0.0;
        builder.AddTerminal(f, a, u, -u);
      }
    }
  }
  return builder.Build();
}

double PartitionReductionValue(const std::vector<int>& items,
                               ReductionVariant variant,
                               const std::vector<double>& sigma,
                               const QuantalModel& model) {
  CheckItems(items);
  if (sigma.size() != items.size()) {
    throw DomainError("one commitment probability per item expected");
  }
  const NormalFormGame nfg = EmbeddedGame(variant);
  double total = 0.0;
  double placed_first = 0.0, placed_second = 0.0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const double x[2] = {sigma[i], 1.0 - sigma[i]};
    total += QseObjectiveNfg(nfg, x, model);
    placed_first += sigma[i] * items[i];
    placed_second += (1.0 - sigma[i]) * items[i];
  }
  const double u[2] = {-placed_first, -placed_second};
  const std::vector<double> w = model.Respond(u);
  return total + w[0] * placed_first + w[1] * placed_second;
}

bool PartitionSolvable(const std::vector<int>& items) {
  CheckItems(items);
  const int sum = std::accumulate(items.begin(), items.end(), 0);
  if (sum % 2 != 0) return false;
  std::vector<char> reachable(sum / 2 + 1, 0);
  reachable[0] = 1;
  for (int x : items) {
    for (int s = sum / 2; s >= x; --s) {
      if (reachable[s - x]) reachable[s] = 1;
    }
  }
  return reachable[sum / 2];
}

}  // namespace quantal::zoo
