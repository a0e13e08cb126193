// Copyright 2026 The Ordlab Authors.
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

// The four reference games used as fixtures across the test suites.

#ifndef ORDLAB_TESTS_SUPPORT_PAPER_GAMES_HPP_
#define ORDLAB_TESTS_SUPPORT_PAPER_GAMES_HPP_

#include <string>
#include <vector>

#include "ordinal/game.hpp"

namespace ordlab_tests {

inline ordinal::Game make_two_player_game(
    std::vector<std::string> row_actions, std::vector<std::string> col_actions,
    std::vector<long> row_payoffs, std::vector<long> col_payoffs) {
  ordinal::Game g;
  g.players = {"a", "b"};
  g.actions = {std::move(row_actions), std::move(col_actions)};
  g.payoffs.resize(2);
  for (long v : row_payoffs) g.payoffs[0].emplace_back(v);
  for (long v : col_payoffs) g.payoffs[1].emplace_back(v);
  return g;
}

// 3x3 game; both players' payoffs matter. Row payoffs (a), then column
// payoffs (b), both laid out row-major over (row, col).
inline ordinal::Game leading_game() {
  return make_two_player_game({"T", "M", "D"}, {"L", "C", "R"},
                              {2, 3, 1, 4, 1, 4, 2, 2, 1},
                              {3, 2, 1, 3, 1, 0, 0, 2, 1});
}

// Battle of the Sexes.
inline ordinal::Game bos_game() {
  return make_two_player_game({"T", "D"}, {"L", "R"}, {2, 0, 0, 1},
                              {1, 0, 0, 2});
}

// 3x2 game with only the row player's payoffs given (column player all
// zero): rows T=(6,1), M=(5,2), D=(4,3).
inline ordinal::Game b_not_v_game() {
  return make_two_player_game({"T", "M", "D"}, {"L", "R"}, {6, 1, 5, 2, 4, 3},
                              {0, 0, 0, 0, 0, 0});
}

// 3x2 game with rows T=(3,0), M=(1,1), D=(0,3), column player all zero.
inline ordinal::Game v_not_r_game() {
  return make_two_player_game({"T", "M", "D"}, {"L", "R"}, {3, 0, 1, 1, 0, 3},
                              {0, 0, 0, 0, 0, 0});
}

inline ordinal::Game one_by_one_game() {
  return make_two_player_game({"T"}, {"L"}, {0}, {0});
}

}  // namespace ordlab_tests

#endif  // ORDLAB_TESTS_SUPPORT_PAPER_GAMES_HPP_
