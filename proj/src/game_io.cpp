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

#include "qgames/game_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qgames {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("game config: " + msg);
}

const Json& field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

GameSpec load_game(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    fail(std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) fail("top level must be an object");

  static const std::set<std::string> known = {"basis", "initial", "moves",
                                              "actions", "payoffs_p1"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) fail("unknown field '" + key + "'");
  }

  GameSpec g;

  const Json& basis = field(doc, "basis");
  if (!basis.is_array() || basis.empty()) {
    fail("'basis' must be a nonempty array of strings");
  }
  for (const Json& label : basis) {
    if (!label.is_string()) fail("'basis' entries must be strings");
    g.basis.push_back(label.get<std::string>());
  }
  const Eigen::Index dim = g.dim();

  const Json& initial = field(doc, "initial");
  if (!initial.is_string()) fail("'initial' must be a basis label");
  {
    const std::string label = initial.get<std::string>();
    auto it = std::find(g.basis.begin(), g.basis.end(), label);
    if (it == g.basis.end()) fail("initial state '" + label + "' is not a basis label");
    g.initial = it - g.basis.begin();
  }

  const Json& moves = field(doc, "moves");
  if (!moves.is_array()) fail("'moves' must be an array");
  for (const Json& m : moves) {
    if (!m.is_string()) fail("'moves' entries must be \"P1\" or \"P2\"");
    const std::string s = m.get<std::string>();
    if (s == "P1") {
      g.moves.push_back(Player::P1);
    } else if (s == "P2") {
      g.moves.push_back(Player::P2);
    } else {
      fail("move owner '" + s + "' must be \"P1\" or \"P2\"");
    }
  }

  const Json& actions = field(doc, "actions");
  if (!actions.is_object() || actions.empty()) {
    fail("'actions' must be a nonempty object");
  }
  for (const auto& [name, rows] : actions.items()) {
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != dim) {
      fail("action '" + name + "' must be a " + std::to_string(dim) + "x" +
           std::to_string(dim) + " matrix");
    }
    CMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const Json& row = rows[static_cast<size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
        fail("action '" + name + "' row " + std::to_string(i) +
             " has the wrong length");
      }
      for (Eigen::Index j = 0; j < dim; ++j) {
        const Json& e = row[static_cast<size_t>(j)];
        if (!e.is_number_integer() ||
            (e.get<int>() != 0 && e.get<int>() != 1)) {
          fail("action '" + name + "' entries must be the integers 0 or 1");
        }
        m(i, j) = static_cast<double>(e.get<int>());
      }
    }
    // Permutation structure is re-checked by validate(); unitarity would
    // reject non-permutation 0/1 matrices with a worse message, so check
    // the row/column sums here first.
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (m.row(i).real().sum() != 1.0 || m.col(i).real().sum() != 1.0) {
        fail("action '" + name + "' is not a permutation");
      }
    }
    g.actions.emplace_back(name, Unitary(std::move(m)));
  }

  const Json& payoffs = field(doc, "payoffs_p1");
  if (!payoffs.is_object()) fail("'payoffs_p1' must be an object");
  g.payoffs.resize(dim);
  std::vector<bool> seen(static_cast<size_t>(dim), false);
  for (const auto& [label, value] : payoffs.items()) {
    auto it = std::find(g.basis.begin(), g.basis.end(), label);
    if (it == g.basis.end()) {
      fail("payoff for '" + label + "' does not match any basis label");
    }
    if (!value.is_number()) fail("payoff for '" + label + "' must be a number");
    const Eigen::Index idx = it - g.basis.begin();
    g.payoffs(idx) = value.get<double>();
    seen[static_cast<size_t>(idx)] = true;
  }
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (!seen[static_cast<size_t>(i)]) {
      fail("missing payoff for basis label '" + g.basis[static_cast<size_t>(i)] + "'");
    }
  }

  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return g;
}

GameSpec load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("game config: cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_game(buf.str());
}

std::string emit_game(const GameSpec& game) {
  game.validate();
  Json doc;
  doc["basis"] = game.basis;
  doc["initial"] = game.basis[static_cast<size_t>(game.initial)];
  Json moves = Json::array();
  for (Player p : game.moves) moves.push_back(to_string(p));
  doc["moves"] = std::move(moves);
  Json actions = Json::object();
  for (const auto& [name, u] : game.actions) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < u.dim(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < u.dim(); ++j) {
        row.push_back(static_cast<int>(u.mat()(i, j).real()));
      }
      rows.push_back(std::move(row));
    }
    actions[name] = std::move(rows);
  }
  doc["actions"] = std::move(actions);
  Json payoffs = Json::object();
  for (Eigen::Index i = 0; i < game.dim(); ++i) {
    payoffs[game.basis[static_cast<size_t>(i)]] = game.payoffs(i);
  }
  doc["payoffs_p1"] = std::move(payoffs);
  return doc.dump(2) + "\n";
}

}  // namespace qgames
