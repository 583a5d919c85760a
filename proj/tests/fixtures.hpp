#pragma once

#include "nashd/game.hpp"

namespace fixtures {

// Matching pennies, already normalized: u1 rewards matching, u2 rewards
// mismatching. Unique equilibrium is uniform play for both.
inline nashd::NormalFormGame matching_pennies() {
  return nashd::NormalFormGame({2, 2},
                               {{1.0, 0.0, 0.0, 1.0}, {0.0, 1.0, 1.0, 0.0}},
                               "matching pennies");
}

// Two-player prisoner's dilemma with payoffs already in [0,1]:
//   (C,C) -> (2/3, 2/3), (C,D) -> (0, 1), (D,C) -> (1, 0),
//   (D,D) -> (1/3, 1/3).
// Defect (action 1) strictly dominates; all-Defect is the unique NE.
inline nashd::NormalFormGame prisoners_dilemma() {
  return nashd::NormalFormGame(
      {2, 2},
      {{2.0 / 3.0, 0.0, 1.0, 1.0 / 3.0}, {2.0 / 3.0, 1.0, 0.0, 1.0 / 3.0}},
      "prisoners dilemma");
}

inline nashd::NormalFormGame single_player_argmax() {
  return nashd::NormalFormGame({2}, {{0.0, 1.0}}, "pick the better arm");
}

inline nashd::NormalFormGame constant_game(int players, int actions,
                                           double value) {
  std::size_t profiles = 1;
  for (int i = 0; i < players; ++i) {
    profiles *= static_cast<std::size_t>(actions);
  }
  return nashd::NormalFormGame(
      std::vector<int>(static_cast<std::size_t>(players), actions),
      std::vector<std::vector<double>>(static_cast<std::size_t>(players),
                                       std::vector<double>(profiles, value)),
      "constant");
}

}  // namespace fixtures
