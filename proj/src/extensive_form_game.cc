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

#include "quantal/extensive_form_game.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <utility>

namespace quantal {

const char* PlayerName(Player p) {
  switch (p) {
    case Player::kLeader:
      return "leader";
    case Player::kFollower:
      return "follower";
    case Player::kChance:
      return "chance";
    case Player::kTerminal:
      return "terminal";
  }
  return "unknown";
}

Player PlayerFromName(const std::string& name) {
  if (name == "leader") return Player::kLeader;
  if (name == "follower") return Player::kFollower;
  if (name == "chance") return Player::kChance;
  if (name == "terminal") return Player::kTerminal;
  throw GameError("unknown player name '" + name + "'");
}

double ExtensiveFormGame::min_utility(Player p) const {
  double v = std::numeric_limits<double>::infinity();
  for (const EfgNode& n : nodes_) {
    if (n.is_terminal()) v = std::min(v, n.utility[PlayerIndex(p)]);
  }
  return v;
}

double ExtensiveFormGame::max_utility(Player p) const {
  double v = -std::numeric_limits<double>::infinity();
  for (const EfgNode& n : nodes_) {
    if (n.is_terminal()) v = std::max(v, n.utility[PlayerIndex(p)]);
  }
  return v;
}

void ExtensiveFormGame::BuildSweeps() {
  for (Player responder : {Player::kLeader, Player::kFollower}) {
    const int r = PlayerIndex(responder);
    std::vector<SweepStep>& sweep = sweeps_[r];
    sweep.clear();
    sweep.reserve(nodes_.size() + infosets_[r].size());
    std::vector<char> node_done(nodes_.size(), 0);
    std::vector<char> infoset_done(infosets_[r].size(), 0);

    // Explicit stack to keep deep trees off the call stack. A frame is either
    // a node or an infoset; `expanded` marks frames whose dependencies have
    // already been pushed.
    struct Frame {
      bool is_infoset;
      int index;
      bool expanded;
    };
    std::vector<Frame> stack;
    stack.push_back({false, 0, false});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (!top.is_infoset) {
        const int id = top.index;
        if (node_done[id]) {
          stack.pop_back();
          continue;
        }
        const EfgNode& n = nodes_[id];
        if (!top.expanded) {
          top.expanded = true;
          const bool own = n.player == responder;
          if (own && !infoset_done[n.infoset]) {
            stack.push_back({true, n.infoset, false});
          }
          for (int a = n.num_children - 1; a >= 0; --a) {
            if (!node_done[n.child(a)]) {
              stack.push_back({false, n.child(a), false});
            }
          }
          continue;
        }
        node_done[id] = 1;
        sweep.push_back({SweepStep::Kind::kNode, id});
        stack.pop_back();
      } else {
        const int id = top.index;
        if (infoset_done[id]) {
          stack.pop_back();
          continue;
        }
        if (!top.expanded) {
          top.expanded = true;
          for (int m : infosets_[r][id].nodes) {
            const EfgNode& n = nodes_[m];
            for (int a = n.num_children - 1; a >= 0; --a) {
              if (!node_done[n.child(a)]) {
                stack.push_back({false, n.child(a), false});
              }
            }
          }
          continue;
        }
        infoset_done[id] = 1;
        sweep.push_back({SweepStep::Kind::kInfoset, id});
        stack.pop_back();
      }
    }
  }
}

int ExtensiveFormGameBuilder::AddNode(RawNode node) {
  const int id = static_cast<int>(nodes_.size());
  if (node.parent == -1) {
    for (const RawNode& n : nodes_) {
      if (n.parent == -1) throw GameError("game tree already has a root");
    }
  } else {
    if (node.parent < 0 || node.parent >= id) {
      throw GameError("parent " + std::to_string(node.parent) +
                      " does not exist");
    }
    RawNode& parent = nodes_[node.parent];
    if (parent.player == Player::kTerminal) {
      throw GameError("terminal node cannot have children");
    }
    if (node.action < 0 || node.action >= parent.num_actions) {
      throw GameError("action index " + std::to_string(node.action) +
                      " out of range at node " + std::to_string(node.parent));
    }
    if (parent.children[node.action] != -1) {
      throw GameError("duplicate child for action " +
                      std::to_string(node.action) + " at node " +
                      std::to_string(node.parent));
    }
    parent.children[node.action] = id;
  }
  node.children.assign(node.num_actions, -1);
  nodes_.push_back(std::move(node));
  return id;
}

int ExtensiveFormGameBuilder::AddChance(int parent, int action,
                                        std::vector<double> probs) {
  if (probs.empty()) throw GameError("chance node needs at least one outcome");
  RawNode n{parent, action, Player::kChance, static_cast<int>(probs.size()),
            "", std::move(probs), {0.0, 0.0}, {}};
  return AddNode(std::move(n));
}

int ExtensiveFormGameBuilder::AddDecision(int parent, int action,
                                          Player player,
                                          const std::string& infoset_key,
                                          int num_actions,
                                          std::vector<std::string> labels) {
  if (player != Player::kLeader && player != Player::kFollower) {
    throw GameError("decision nodes belong to the leader or the follower");
  }
  if (num_actions < 1) throw GameError("decision node needs an action");
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != num_actions) {
      throw GameError("action label count mismatch at infoset " +
                      infoset_key);
    }
    auto& stored = labels_[PlayerIndex(player)][infoset_key];
    if (!stored.empty() && stored != labels) {
      throw GameError("inconsistent action labels at infoset " + infoset_key);
    }
    stored = std::move(labels);
  }
  RawNode n{parent, action, player, num_actions, infoset_key, {},
            {0.0, 0.0}, {}};
  return AddNode(std::move(n));
}

int ExtensiveFormGameBuilder::AddTerminal(int parent, int action,
                                          double leader_utility) {
  if (!zero_sum_) {
    throw GameError("general-sum terminals need both utilities");
  }
  return AddTerminal(parent, action, leader_utility, -leader_utility);
}

int ExtensiveFormGameBuilder::AddTerminal(int parent, int action,
                                          double leader_utility,
                                          double follower_utility) {
  if (!std::isfinite(leader_utility) || !std::isfinite(follower_utility)) {
    throw GameError("terminal utilities must be finite");
  }
  if (zero_sum_ && follower_utility != -leader_utility) {
    throw GameError("zero-sum terminal must have negated follower utility");
  }
  RawNode n{parent, action, Player::kTerminal, 0, "", {},
            {leader_utility, follower_utility}, {}};
  return AddNode(std::move(n));
}

ExtensiveFormGame ExtensiveFormGameBuilder::Build() const {
  if (nodes_.empty()) throw GameError("game tree is empty");
  int root = -1;
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    if (nodes_[i].parent == -1) root = i;
  }
  if (root == -1) throw GameError("game tree has no root");

  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    const RawNode& n = nodes_[i];
    for (int a = 0; a < n.num_actions; ++a) {
      if (n.children[a] == -1) {
        throw GameError("node " + std::to_string(i) + " is missing action " +
                        std::to_string(a));
      }
    }
    if (n.player == Player::kChance) {
      double sum = 0.0;
      for (double p : n.chance_probs) {
        if (!(p >= 0.0)) throw GameError("negative chance probability");
        sum += p;
      }
      if (std::abs(sum - 1.0) > 1e-12) {
        throw GameError("chance distribution at node " + std::to_string(i) +
                        " sums to " + std::to_string(sum));
      }
    }
  }

  ExtensiveFormGame game;
  game.zero_sum_ = zero_sum_;

  // Breadth-first layout.
  std::vector<int> order;
  order.reserve(nodes_.size());
  std::vector<int> new_id(nodes_.size(), -1);
  order.push_back(root);
  new_id[root] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int c : nodes_[order[head]].children) {
      new_id[c] = static_cast<int>(order.size());
      order.push_back(c);
    }
  }
  if (order.size() != nodes_.size()) {
    throw GameError("game tree contains nodes unreachable from the root");
  }

  game.nodes_.resize(order.size());
  std::array<std::map<std::string, int>, 2> infoset_ids;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const RawNode& raw = nodes_[order[k]];
    EfgNode& n = game.nodes_[k];
    n.player = raw.player;
    n.num_children = raw.num_actions;
    n.first_child = raw.num_actions > 0 ? new_id[raw.children[0]] : -1;
    n.utility = raw.utility;
    if (raw.parent != -1) {
      n.parent = new_id[raw.parent];
      n.action = raw.action;
      n.depth = game.nodes_[n.parent].depth + 1;
      const RawNode& parent = nodes_[raw.parent];
      if (parent.player == Player::kChance) {
        n.chance_prob = parent.chance_probs[raw.action];
      }
    }
    game.max_depth_ = std::max(game.max_depth_, n.depth);
    if (n.is_terminal()) ++game.num_terminals_;
    if (n.player == Player::kLeader || n.player == Player::kFollower) {
      const int p = PlayerIndex(n.player);
      auto [it, inserted] = infoset_ids[p].try_emplace(
          raw.infoset_key, static_cast<int>(game.infosets_[p].size()));
      if (inserted) {
        Infoset info;
        info.player = n.player;
        info.key = raw.infoset_key;
        info.num_actions = raw.num_actions;
        auto label_it = labels_[p].find(raw.infoset_key);
        if (label_it != labels_[p].end()) {
          info.action_labels = label_it->second;
        } else {
          for (int a = 0; a < raw.num_actions; ++a) {
            info.action_labels.push_back(std::to_string(a));
          }
        }
        game.infosets_[p].push_back(std::move(info));
      }
      Infoset& info = game.infosets_[p][it->second];
      if (info.num_actions != raw.num_actions) {
        throw GameError("infoset '" + raw.infoset_key +
                        "' has members with different action counts");
      }
      info.nodes.push_back(static_cast<int>(k));
      n.infoset = it->second;
    }
  }
  // Children of one node are contiguous in breadth-first order.
  for (const EfgNode& n : game.nodes_) {
    for (int a = 0; a < n.num_children; ++a) {
      if (game.nodes_[n.child(a)].parent != &n - game.nodes_.data() ||
          game.nodes_[n.child(a)].action != a) {
        throw GameError("internal layout error");
      }
    }
  }

  for (int p = 0; p < 2; ++p) {
    int offset = 0;
    for (Infoset& info : game.infosets_[p]) {
      info.offset = offset;
      offset += info.num_actions;
    }
    game.num_actions_[p] = offset;
  }

  // Perfect recall: every member of an infoset must share the owner's last
  // sequence. Sequence ids are tree-structured, so equal last sequences imply
  // equal full sequences.
  const int n_nodes = game.num_nodes();
  std::vector<std::array<int, 2>> last_seq(n_nodes, {0, 0});
  std::vector<std::array<int, 2>> seq_depth(n_nodes, {0, 0});
  for (int id = 1; id < n_nodes; ++id) {
    const EfgNode& n = game.nodes_[id];
    const EfgNode& parent = game.nodes_[n.parent];
    last_seq[id] = last_seq[n.parent];
    seq_depth[id] = seq_depth[n.parent];
    if (parent.player == Player::kLeader || parent.player == Player::kFollower) {
      const int p = PlayerIndex(parent.player);
      last_seq[id][p] =
          1 + game.infosets_[p][parent.infoset].offset + n.action;
      seq_depth[id][p] += 1;
    }
  }
  for (int p = 0; p < 2; ++p) {
    for (Infoset& info : game.infosets_[p]) {
      const int first = info.nodes.front();
      info.parent_sequence = last_seq[first][p];
      info.sequence_depth = seq_depth[first][p];
      for (int m : info.nodes) {
        if (last_seq[m][p] != info.parent_sequence) {
          throw GameError("infoset '" + info.key +
                          "' violates perfect recall");
        }
      }
    }
  }

  game.BuildSweeps();
  return game;
}

}  // namespace quantal
