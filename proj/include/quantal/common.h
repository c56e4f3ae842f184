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

#ifndef QUANTAL_COMMON_H_
#define QUANTAL_COMMON_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace quantal {

// The rational player is always the leader; the quantal player is always the
// follower.
enum class Player : std::uint8_t {
  kLeader = 0,
  kFollower = 1,
  kChance = 2,
  kTerminal = 3,
};

constexpr int PlayerIndex(Player p) { return static_cast<int>(p); }

constexpr Player Opponent(Player p) {
  return p == Player::kLeader ? Player::kFollower : Player::kLeader;
}

const char* PlayerName(Player p);
Player PlayerFromName(const std::string& name);

// A probability distribution over one player's actions.
using MixedStrategy = std::vector<double>;

// Raised for malformed games, strategies or configurations.
class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a strategy does not match the game it is evaluated on.
class DomainError : public GameError {
 public:
  using GameError::GameError;
};

}  // namespace quantal

#endif  // QUANTAL_COMMON_H_
