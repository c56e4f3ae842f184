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

#include "quantal/serialization.h"

#include <fstream>
#include <map>
#include <queue>
#include <sstream>

namespace quantal {

namespace {

const char* NodePlayerName(Player p) {
  switch (p) {
    case Player::kLeader: return "leader";
    case Player::kFollower: return "follower";
    case Player::kChance: return "chance";
    case Player::kTerminal: return "terminal";
  }
  return "";
}

Player NodePlayerFromName(const std::string& s) {
  if (s == "leader") return Player::kLeader;
  if (s == "follower") return Player::kFollower;
  if (s == "chance") return Player::kChance;
  if (s == "terminal") return Player::kTerminal;
  throw GameError("unknown node player '" + s + "'");
}

Json Matrix(const NormalFormGame& game, Player p) {
  Json rows = Json::array();
  for (int r = 0; r < game.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < game.cols(); ++c) row.push_back(game.payoff(p, r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> MatrixFrom(const Json& j) {
  return j.get<std::vector<std::vector<double>>>();
}

}  // namespace

Json ToJson(const ExtensiveFormGame& game) {
  Json j;
  j["players"] = {"leader", "follower"};
  j["zero_sum"] = game.zero_sum();
  Json nodes = Json::array();
  for (int id = 0; id < game.num_nodes(); ++id) {
    const EfgNode& n = game.node(id);
    Json node;
    node["id"] = id;
    node["parent"] = n.parent;
    node["action"] = n.action;
    node["player"] = NodePlayerName(n.player);
    if (n.player == Player::kChance) {
      Json probs = Json::array();
      for (int a = 0; a < n.num_children; ++a) {
        probs.push_back(game.node(n.child(a)).chance_prob);
      }
      node["chance_probs"] = std::move(probs);
    }
    if (n.is_terminal()) node["utility"] = {n.utility[0], n.utility[1]};
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  Json infosets = Json::array();
  for (Player p : {Player::kLeader, Player::kFollower}) {
    for (const Infoset& info : game.infosets(p)) {
      Json i;
      i["player"] = NodePlayerName(p);
      i["key"] = info.key;
      i["node_ids"] = info.nodes;
      Json actions = Json::array();
      for (int a = 0; a < info.num_actions; ++a) {
        actions.push_back(a < static_cast<int>(info.action_labels.size())
                              ? info.action_labels[a]
                              : std::to_string(a));
      }
      i["actions"] = std::move(actions);
      infosets.push_back(std::move(i));
    }
  }
  j["infosets"] = std::move(infosets);
  return j;
}

ExtensiveFormGame ExtensiveFormGameFromJson(const Json& j) {
  const bool zero_sum = j.value("zero_sum", true);
  const Json& nodes = j.at("nodes");
  const int n = static_cast<int>(nodes.size());
  struct Raw {
    int parent = -1;
    int action = 0;
    Player player = Player::kTerminal;
    std::vector<double> chance;
    std::array<double, 2> utility = {0.0, 0.0};
    std::vector<int> children;
    int infoset = -1;
  };
  std::map<int, int> index_of;
  std::vector<Raw> raw(n);
  for (int k = 0; k < n; ++k) {
    const Json& node = nodes[k];
    const int id = node.at("id").get<int>();
    if (!index_of.emplace(id, k).second) {
      throw GameError("duplicate node id " + std::to_string(id));
    }
    raw[k].parent = node.at("parent").get<int>();
    raw[k].action = node.value("action", 0);
    raw[k].player = NodePlayerFromName(node.at("player").get<std::string>());
    if (node.contains("chance_probs")) {
      raw[k].chance = node["chance_probs"].get<std::vector<double>>();
    }
    if (node.contains("utility")) {
      const Json& u = node["utility"];
      if (u.is_array()) {
        raw[k].utility = {u.at(0).get<double>(),
                          u.size() > 1 ? u.at(1).get<double>()
                                       : -u.at(0).get<double>()};
      } else {
        raw[k].utility = {u.get<double>(), -u.get<double>()};
      }
    }
  }
  // Infoset membership, keys and action labels.
  struct InfoRaw {
    Player player;
    std::string key;
    std::vector<std::string> actions;
  };
  std::vector<InfoRaw> infos;
  for (const Json& info : j.at("infosets")) {
    const Player p = NodePlayerFromName(info.at("player").get<std::string>());
    const int idx = static_cast<int>(infos.size());
    std::string key = info.contains("key") ? info["key"].get<std::string>()
                                           : "I" + std::to_string(idx);
    infos.push_back({p, std::move(key),
                     info.at("actions").get<std::vector<std::string>>()});
    for (int id : info.at("node_ids").get<std::vector<int>>()) {
      const auto it = index_of.find(id);
      if (it == index_of.end()) {
        throw GameError("infoset references unknown node " + std::to_string(id));
      }
      Raw& r = raw[it->second];
      if (r.player != p) {
        throw GameError("infoset player does not match node " +
                        std::to_string(id));
      }
      if (r.infoset != -1) {
        throw GameError("node " + std::to_string(id) + " is in two infosets");
      }
      r.infoset = idx;
    }
  }
  int root = -1;
  for (int k = 0; k < n; ++k) {
    if (raw[k].parent == -1) {
      if (root != -1) throw GameError("game tree has two roots");
      root = k;
      continue;
    }
    const auto it = index_of.find(raw[k].parent);
    if (it == index_of.end()) {
      throw GameError("unknown parent " + std::to_string(raw[k].parent));
    }
    raw[it->second].children.push_back(k);
  }
  if (root == -1) throw GameError("game tree has no root");

  ExtensiveFormGameBuilder builder(zero_sum);
  std::vector<int> built(n, -1);
  std::queue<int> todo;
  todo.push(root);
  while (!todo.empty()) {
    const int k = todo.front();
    todo.pop();
    const Raw& r = raw[k];
    const int parent = r.parent == -1 ? -1 : built[index_of.at(r.parent)];
    switch (r.player) {
      case Player::kChance:
        built[k] = builder.AddChance(parent, r.action, r.chance);
        break;
      case Player::kLeader:
      case Player::kFollower: {
        if (r.infoset == -1) {
          throw GameError("decision node without an infoset");
        }
        const InfoRaw& info = infos[r.infoset];
        built[k] = builder.AddDecision(parent, r.action, r.player, info.key,
                                       static_cast<int>(info.actions.size()),
                                       info.actions);
        break;
      }
      case Player::kTerminal:
        built[k] = zero_sum
                       ? builder.AddTerminal(parent, r.action, r.utility[0])
                       : builder.AddTerminal(parent, r.action, r.utility[0],
                                             r.utility[1]);
        break;
    }
    for (int c : r.children) todo.push(c);
  }
  return builder.Build();
}

Json ToJson(const NormalFormGame& game) {
  Json j;
  j["leader_payoffs"] = Matrix(game, Player::kLeader);
  j["follower_payoffs"] = Matrix(game, Player::kFollower);
  j["zero_sum"] = game.zero_sum();
  return j;
}

NormalFormGame NormalFormGameFromJson(const Json& j) {
  const auto leader = MatrixFrom(j.at("leader_payoffs"));
  if (j.value("zero_sum", false)) {
    const NormalFormGame g = NormalFormGame::ZeroSum(leader);
    if (j.contains("follower_payoffs") &&
        MatrixFrom(j["follower_payoffs"]) != MatrixFrom(ToJson(g)["follower_payoffs"])) {
      throw GameError("zero-sum game with non-negated follower payoffs");
    }
    return g;
  }
  return NormalFormGame::GeneralSum(leader, MatrixFrom(j.at("follower_payoffs")));
}

AnyGame GameFromJson(const Json& j) {
  if (j.contains("nodes")) return ExtensiveFormGameFromJson(j);
  return NormalFormGameFromJson(j);
}

Json ToJson(const QuantalModel& model) {
  Json j;
  switch (model.kind()) {
    case QuantalModel::Kind::kLogit:
      j["kind"] = "logit";
      j["lambda"] = model.lambda();
      break;
    case QuantalModel::Kind::kOrderingBased:
      j["kind"] = "ordering_based";
      if (!model.ordering_weights().empty()) {
        j["weights"] = model.ordering_weights();
      }
      break;
    case QuantalModel::Kind::kUniform:
      j["kind"] = "uniform";
      break;
    case QuantalModel::Kind::kCustom:
      throw GameError("custom generators cannot be serialized");
  }
  return j;
}

QuantalModel ModelFromJson(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "logit") {
    const double lambda = j.at("lambda").get<double>();
    return lambda == 0.0 ? QuantalModel::Uniform() : QuantalModel::Logit(lambda);
  }
  if (kind == "ordering_based") {
    return QuantalModel::OrderingBased(
        j.value("weights", std::vector<double>{}));
  }
  if (kind == "uniform") return QuantalModel::Uniform();
  throw GameError("unknown quantal model kind '" + kind + "'");
}

Json ToJson(const BehavioralStrategy& strategy) {
  Json j;
  j["player"] = NodePlayerName(strategy.player());
  Json probs = Json::array();
  for (int i = 0; i < strategy.num_infosets(); ++i) {
    const auto d = strategy.at(i);
    probs.push_back(std::vector<double>(d.begin(), d.end()));
  }
  j["probs"] = std::move(probs);
  return j;
}

BehavioralStrategy StrategyFromJson(const Json& j) {
  const Player p = NodePlayerFromName(j.at("player").get<std::string>());
  std::vector<int> offsets, sizes;
  std::vector<double> flat;
  for (const Json& d : j.at("probs")) {
    offsets.push_back(static_cast<int>(flat.size()));
    const auto v = d.get<std::vector<double>>();
    sizes.push_back(static_cast<int>(v.size()));
    flat.insert(flat.end(), v.begin(), v.end());
  }
  BehavioralStrategy s(p, std::move(offsets), std::move(sizes), std::move(flat));
  s.ValidateDistributions();
  return s;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GameError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw GameError(path + ": " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GameError("cannot write " + path);
  out << j.dump(1) << '\n';
}

}  // namespace quantal
