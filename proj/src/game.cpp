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

#include "qgames/game.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qgames {

namespace {

bool is_permutation_matrix(const CMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    int row_ones = 0, col_ones = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      for (const Complex& e : {m(i, j), m(j, i)}) {
        if (std::abs(e.imag()) > 0.0) return false;
        if (e.real() != 0.0 && e.real() != 1.0) return false;
      }
      row_ones += m(i, j).real() == 1.0;
      col_ones += m(j, i).real() == 1.0;
    }
    if (row_ones != 1 || col_ones != 1) return false;
  }
  return true;
}

void check_distribution(const std::vector<double>& probs, const char* what) {
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument(std::string(what) +
                                  ": probabilities must be nonnegative");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kMatTol) {
    std::ostringstream os;
    os << what << ": probabilities sum to " << total << ", expected 1";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

int GameSpec::moves_of(Player p) const {
  return static_cast<int>(std::count(moves.begin(), moves.end(), p));
}

std::vector<int> GameSpec::move_positions(Player p) const {
  std::vector<int> out;
  for (int i = 0; i < num_moves(); ++i) {
    if (moves[i] == p) out.push_back(i);
  }
  return out;
}

int GameSpec::action_index(const std::string& name) const {
  for (size_t i = 0; i < actions.size(); ++i) {
    if (actions[i].first == name) return static_cast<int>(i);
  }
  return -1;
}

const Unitary& GameSpec::action(const std::string& name) const {
  const int idx = action_index(name);
  if (idx < 0) {
    throw std::invalid_argument("unknown action name: " + name);
  }
  return actions[static_cast<size_t>(idx)].second;
}

void GameSpec::validate() const {
  if (basis.empty()) {
    throw std::invalid_argument("game: basis must be nonempty");
  }
  std::set<std::string> labels(basis.begin(), basis.end());
  if (labels.size() != basis.size()) {
    throw std::invalid_argument("game: basis labels must be distinct");
  }
  if (initial < 0 || initial >= dim()) {
    throw std::invalid_argument("game: initial state index out of range");
  }
  if (actions.empty()) {
    throw std::invalid_argument("game: at least one action is required");
  }
  std::set<std::string> action_names;
  for (const auto& [name, u] : actions) {
    if (!action_names.insert(name).second) {
      throw std::invalid_argument("game: duplicate action name '" + name +
                                  "'");
    }
    if (u.dim() != dim()) {
      throw std::invalid_argument("game: action '" + name +
                                  "' has wrong dimension");
    }
    if (!is_permutation_matrix(u.mat())) {
      throw std::invalid_argument("game: action '" + name +
                                  "' is not a permutation");
    }
  }
  if (payoffs.size() != dim()) {
    std::ostringstream os;
    os << "game: payoff vector has length " << payoffs.size() << ", expected "
       << dim();
    throw std::invalid_argument(os.str());
  }
  if (!payoffs.allFinite()) {
    throw std::invalid_argument("game: payoffs must be finite");
  }
}

GameSpec pennyflip() {
  CMatrix eye = CMatrix::Identity(2, 2);
  CMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  GameSpec g;
  g.basis = {"H", "T"};
  g.initial = 0;
  g.moves = {Player::P2, Player::P1, Player::P2};
  g.actions.emplace_back("N", Unitary(eye));
  g.actions.emplace_back("F", Unitary(swap));
  g.payoffs.resize(2);
  g.payoffs << -1.0, 1.0;
  g.validate();
  return g;
}

GameSpec pennyflip_two_move() {
  GameSpec g = pennyflip();
  g.moves = {Player::P2, Player::P1};
  return g;
}

Player strategy_owner(const Strategy& s) {
  return std::visit([](const auto& v) { return v.owner; }, s);
}

std::vector<PureClassicalStrategy> enumerate_pure(const GameSpec& game,
                                                  Player owner) {
  const int k = game.moves_of(owner);
  const size_t n_actions = game.actions.size();
  std::vector<PureClassicalStrategy> out;
  std::vector<size_t> odo(static_cast<size_t>(k), 0);
  while (true) {
    PureClassicalStrategy s{owner, {}};
    s.actions.reserve(odo.size());
    for (size_t idx : odo) s.actions.push_back(game.actions[idx].first);
    out.push_back(std::move(s));
    int pos = k - 1;
    while (pos >= 0) {
      if (++odo[static_cast<size_t>(pos)] < n_actions) break;
      odo[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

MixedClassicalStrategy behavioral_to_mixed(
    const GameSpec& game, Player owner,
    const std::vector<BehavioralMove>& per_move) {
  const int k = game.moves_of(owner);
  if (static_cast<int>(per_move.size()) != k) {
    std::ostringstream os;
    os << "behavioral_to_mixed: got " << per_move.size()
       << " per-move distributions, owner has " << k << " moves";
    throw std::invalid_argument(os.str());
  }
  for (const BehavioralMove& dist : per_move) {
    std::vector<double> probs;
    for (const auto& [name, p] : dist) {
      if (game.action_index(name) < 0) {
        throw std::invalid_argument("behavioral_to_mixed: unknown action '" +
                                    name + "'");
      }
      probs.push_back(p);
    }
    check_distribution(probs, "behavioral_to_mixed");
  }

  MixedClassicalStrategy out{owner, {}};
  std::vector<size_t> odo(per_move.size(), 0);
  while (true) {
    double prob = 1.0;
    PureClassicalStrategy pure{owner, {}};
    for (size_t m = 0; m < per_move.size(); ++m) {
      const auto& [name, p] = per_move[m][odo[m]];
      prob *= p;
      pure.actions.push_back(name);
    }
    out.support.emplace_back(prob, std::move(pure));
    int pos = static_cast<int>(per_move.size()) - 1;
    while (pos >= 0) {
      size_t idx = static_cast<size_t>(pos);
      if (++odo[idx] < per_move[idx].size()) break;
      odo[idx] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

namespace {

void check_strategy(const GameSpec& game, const Strategy& s, Player expected) {
  if (strategy_owner(s) != expected) {
    std::ostringstream os;
    os << "profile: strategy in the " << to_string(expected)
       << " slot is owned by " << to_string(strategy_owner(s));
    throw std::invalid_argument(os.str());
  }
  const size_t k = static_cast<size_t>(game.moves_of(expected));

  auto check_pure = [&](const PureClassicalStrategy& p) {
    if (p.actions.size() != k) {
      throw std::invalid_argument("profile: classical strategy length "
                                  "does not match owned move count");
    }
    for (const std::string& name : p.actions) {
      if (game.action_index(name) < 0) {
        throw std::invalid_argument("profile: unknown action '" + name + "'");
      }
    }
  };
  auto check_quantum = [&](const QuantumStrategy& q) {
    if (q.unitaries.size() != k) {
      throw std::invalid_argument("profile: quantum strategy length "
                                  "does not match owned move count");
    }
    for (const Unitary& u : q.unitaries) {
      if (u.dim() != game.dim()) {
        throw std::invalid_argument("profile: unitary dimension mismatch");
      }
    }
  };

  if (const auto* p = std::get_if<PureClassicalStrategy>(&s)) {
    check_pure(*p);
  } else if (const auto* m = std::get_if<MixedClassicalStrategy>(&s)) {
    if (m->support.empty()) {
      throw std::invalid_argument("profile: empty mixed strategy");
    }
    std::vector<double> probs;
    for (const auto& [prob, pure] : m->support) {
      probs.push_back(prob);
      if (pure.owner != m->owner) {
        throw std::invalid_argument(
            "profile: mixed strategy support member has a different owner");
      }
      check_pure(pure);
    }
    check_distribution(probs, "profile");
  } else if (const auto* q = std::get_if<QuantumStrategy>(&s)) {
    check_quantum(*q);
  } else if (const auto* mq = std::get_if<MixedQuantumStrategy>(&s)) {
    if (mq->support.empty()) {
      throw std::invalid_argument("profile: empty mixed quantum strategy");
    }
    std::vector<double> probs;
    for (const auto& [prob, qs] : mq->support) {
      probs.push_back(prob);
      if (qs.owner != mq->owner) {
        throw std::invalid_argument(
            "profile: mixed strategy support member has a different owner");
      }
      check_quantum(qs);
    }
    check_distribution(probs, "profile");
  }
}

}  // namespace

void check_profile(const GameSpec& game, const StrategyProfile& profile) {
  check_strategy(game, profile.p1, Player::P1);
  check_strategy(game, profile.p2, Player::P2);
}

}  // namespace qgames
