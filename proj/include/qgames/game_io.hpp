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

#ifndef QGAMES_GAME_IO_HPP_
#define QGAMES_GAME_IO_HPP_

#include <string>

#include "qgames/game.hpp"

namespace qgames {

// Game configuration document (JSON):
//   {
//     "basis":      ["H", "T"],
//     "initial":    "H",
//     "moves":      ["P2", "P1", "P2"],
//     "actions":    {"N": [[1,0],[0,1]], "F": [[0,1],[1,0]]},
//     "payoffs_p1": {"H": -1, "T": 1}
//   }
// Action matrices are 0/1 permutation matrices; action declaration order is
// preserved. Unknown fields are rejected. load_game(emit_game(g)) == g.

GameSpec load_game(const std::string& json_text);
GameSpec load_game_file(const std::string& path);
std::string emit_game(const GameSpec& game);

}  // namespace qgames

#endif  // QGAMES_GAME_IO_HPP_
