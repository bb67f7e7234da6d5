// Copyright 2026 The qgames authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QGAMES_GAME_HPP_
#define QGAMES_GAME_HPP_

// Game definitions and the four strategy classes. A game is a sequence of
// blind moves: each move is owned by one of two players, who acts on the
// state without observing it, so a strategy is an unconditional sequence of
// actions. Payoffs are zero-sum and stated for player 1.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qgames/linalg.hpp"

namespace qgames {

enum class Player { P1 = 0, P2 = 1 };

inline Player other(Player p) { return p == Player::P1 ? Player::P2 : Player::P1; }
inline const char* to_string(Player p) { return p == Player::P1 ? "P1" : "P2"; }

// A finite sequential two-person zero-sum game over a quantum state.
//
// Classical actions are 0/1 permutation matrices keyed by name; declaration
// order is meaningful (it fixes pure-strategy enumeration order). Payoffs
// are to player 1 per terminal basis state; player 2 receives the negation.
struct GameSpec {
  std::vector<std::string> basis;
  Eigen::Index initial = 0;  // basis index of the starting pure state
  std::vector<Player> moves;
  std::vector<std::pair<std::string, Unitary>> actions;
  Eigen::VectorXd payoffs;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()); }
  int num_moves() const { return static_cast<int>(moves.size()); }
  int moves_of(Player p) const;
  // Global move indices owned by a player, in order.
  std::vector<int> move_positions(Player p) const;
  int action_index(const std::string& name) const;  // -1 if absent
  const Unitary& action(const std::string& name) const;

  // Checks every structural invariant; throws std::invalid_argument with a
  // description of the first violation.
  void validate() const;
};

// The built-in penny flip game: basis {H, T}, state starts at H, player 2
// moves first and last, actions N (stay) and F (swap), player 1 is paid -1
// at H and +1 at T.
GameSpec pennyflip();

// The two-move truncation (player 2 moves, then player 1); used by the
// equilibrium demos.
GameSpec pennyflip_two_move();

struct PureClassicalStrategy {
  Player owner;
  std::vector<std::string> actions;  // one name per owned move, in order
};

struct MixedClassicalStrategy {
  Player owner;
  std::vector<std::pair<double, PureClassicalStrategy>> support;
};

struct QuantumStrategy {
  Player owner;
  std::vector<Unitary> unitaries;  // one per owned move, in order
};

struct MixedQuantumStrategy {
  Player owner;
  std::vector<std::pair<double, QuantumStrategy>> support;
};

using Strategy = std::variant<PureClassicalStrategy, MixedClassicalStrategy,
                              QuantumStrategy, MixedQuantumStrategy>;

Player strategy_owner(const Strategy& s);

struct StrategyProfile {
  Strategy p1;
  Strategy p2;

  const Strategy& of(Player p) const { return p == Player::P1 ? p1 : p2; }
};

// All |actions|^k pure strategies for a player owning k moves, enumerated
// odometer-style in declared action order (last move varies fastest). An
// owner with zero moves gets the single empty strategy.
std::vector<PureClassicalStrategy> enumerate_pure(const GameSpec& game,
                                                  Player owner);

// Per-move distribution over action names.
using BehavioralMove = std::vector<std::pair<std::string, double>>;

// Expands independent per-move randomization into the product distribution
// over action sequences. Each per-move distribution must be valid and there
// must be exactly one per owned move.
MixedClassicalStrategy behavioral_to_mixed(
    const GameSpec& game, Player owner,
    const std::vector<BehavioralMove>& per_move);

// Throws std::invalid_argument unless the profile is consistent with the
// game: owners P1/P2 in order, per-strategy move counts and dimensions
// match, action names exist, mixture weights form distributions.
void check_profile(const GameSpec& game, const StrategyProfile& profile);

}  // namespace qgames

#endif  // QGAMES_GAME_HPP_
