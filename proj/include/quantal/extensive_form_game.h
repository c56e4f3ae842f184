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

#ifndef QUANTAL_EXTENSIVE_FORM_GAME_H_
#define QUANTAL_EXTENSIVE_FORM_GAME_H_

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "quantal/common.h"

namespace quantal {

// A history of the game tree. Nodes are stored in breadth-first order, so a
// parent always precedes its children and the children of one node are
// contiguous.
struct EfgNode {
  int parent = -1;
  int action = -1;  // index of this node in the parent's action list
  Player player = Player::kTerminal;
  int infoset = -1;  // per-player infoset index for decision nodes
  int first_child = -1;
  int num_children = 0;
  int depth = 0;
  double chance_prob = 1.0;  // probability of the chance edge into this node
  std::array<double, 2> utility = {0.0, 0.0};  // terminals only

  bool is_terminal() const { return player == Player::kTerminal; }
  int child(int a) const { return first_child + a; }
};

struct Infoset {
  Player player = Player::kLeader;
  std::string key;
  std::vector<int> nodes;
  int num_actions = 0;
  std::vector<std::string> action_labels;
  // Sequence of the owner leading into this infoset (0 = empty sequence).
  int parent_sequence = 0;
  // Number of the owner's own actions taken before reaching the infoset.
  int sequence_depth = 0;
  // Offset of this infoset's actions in flat per-player arrays. Sequence id of
  // action a is 1 + offset + a.
  int offset = 0;
};

// One step of a bottom-up sweep that resolves a responding player's strategy.
// Evaluating a node needs its children (and, for the responder, its infoset);
// resolving an infoset needs the children of all its member nodes.
struct SweepStep {
  enum class Kind : std::uint8_t { kNode, kInfoset };
  Kind kind;
  int index;
};

class ExtensiveFormGameBuilder;

// Finite two-player game tree with chance, information sets and perfect
// recall. Immutable after construction.
class ExtensiveFormGame {
 public:
  const std::vector<EfgNode>& nodes() const { return nodes_; }
  const EfgNode& node(int id) const { return nodes_[id]; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_terminals() const { return num_terminals_; }
  bool zero_sum() const { return zero_sum_; }

  const std::vector<Infoset>& infosets(Player p) const {
    return infosets_[PlayerIndex(p)];
  }
  const Infoset& infoset(Player p, int id) const {
    return infosets_[PlayerIndex(p)][id];
  }
  int num_infosets(Player p) const {
    return static_cast<int>(infosets_[PlayerIndex(p)].size());
  }
  // Total number of (infoset, action) pairs of a player.
  int num_infoset_actions(Player p) const { return num_actions_[PlayerIndex(p)]; }
  // Including the empty sequence.
  int num_sequences(Player p) const { return 1 + num_infoset_actions(p); }

  // Sweep order for computing a response of `responder` bottom-up.
  const std::vector<SweepStep>& response_sweep(Player responder) const {
    return sweeps_[PlayerIndex(responder)];
  }

  int max_depth() const { return max_depth_; }
  double min_utility(Player p) const;
  double max_utility(Player p) const;

 private:
  friend class ExtensiveFormGameBuilder;
  ExtensiveFormGame() = default;
  void BuildSweeps();

  std::vector<EfgNode> nodes_;
  std::array<std::vector<Infoset>, 2> infosets_;
  std::array<int, 2> num_actions_ = {0, 0};
  std::array<std::vector<SweepStep>, 2> sweeps_;
  int num_terminals_ = 0;
  int max_depth_ = 0;
  bool zero_sum_ = true;
};

// Incremental construction of an ExtensiveFormGame. Nodes may be added in any
// order as long as the parent exists; the action index of every edge is
// explicit. Build() validates the tree and rejects imperfect recall.
class ExtensiveFormGameBuilder {
 public:
  explicit ExtensiveFormGameBuilder(bool zero_sum = true)
      : zero_sum_(zero_sum) {}

  // parent == -1 creates the root.
  int AddChance(int parent, int action, std::vector<double> probs);
  int AddDecision(int parent, int action, Player player,
                  const std::string& infoset_key, int num_actions,
                  std::vector<std::string> action_labels = {});
  // Zero-sum terminal: follower utility is the negation.
  int AddTerminal(int parent, int action, double leader_utility);
  int AddTerminal(int parent, int action, double leader_utility,
                  double follower_utility);

  int num_nodes() const { return static_cast<int>(nodes_.size()); }

  ExtensiveFormGame Build() const;

 private:
  struct RawNode {
    int parent;
    int action;
    Player player;
    int num_actions;
    std::string infoset_key;
    std::vector<double> chance_probs;
    std::array<double, 2> utility;
    std::vector<int> children;
  };
  int AddNode(RawNode node);

  bool zero_sum_;
  std::vector<RawNode> nodes_;
  std::array<std::map<std::string, std::vector<std::string>>, 2> labels_;
};

}  // namespace quantal

#endif  // QUANTAL_EXTENSIVE_FORM_GAME_H_
