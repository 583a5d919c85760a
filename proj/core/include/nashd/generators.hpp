#pragma once

#include <cstdint>
#include <string>

#include "nashd/game.hpp"

namespace nashd {

// Refuse to materialize more than this many payoff entries
// (players * profiles) in one game.
inline constexpr std::size_t kMaxPayoffEntries = 100'000'000;

enum class GameClass {
  random,
  prisoners_dilemma_n,
  majority_voting,
  congestion,
  coordination,
};

// Accepted names: random, prisoners_dilemma_n, majority_voting, congestion,
// coordination. Throws std::invalid_argument otherwise.
GameClass parse_game_class(const std::string& name);
std::string to_string(GameClass game_class);

struct GameSpec {
  GameClass class_name = GameClass::random;
  int num_players = 2;
  int actions_per_player = 2;
  std::uint64_t seed = 0;
};

// Dispatches to the class constructors below. prisoners_dilemma_n ignores
// actions_per_player (always 2 actions) and seed; coordination ignores seed.
NormalFormGame make_game(const GameSpec& spec);

// i.i.d. Uniform[0,1] payoff per player per pure profile. Entries are drawn
// player by player, each tensor in flat layout order, from Rng(seed).
// Throws std::length_error when players * actions^players exceeds
// kMaxPayoffEntries.
NormalFormGame random_game(int players, int actions, std::uint64_t seed);

// Generalized N-player prisoner's dilemma, 2 <= players <= 20. Actions are
// {Cooperate=0, Defect=1}; with k other players cooperating the raw payoff
// is k/(players-1) - 0.4 * [i cooperates], then normalized into [0,1].
// Defect is strictly dominant and all-Defect is the unique equilibrium.
NormalFormGame prisoners_dilemma_n(int players);

// Majority voting, players >= 3, alternatives >= 2. Each player draws a
// private Uniform[0,1] value per alternative (player-major order from
// Rng(seed)); the alternative with the most votes wins, lowest index
// breaking ties, and every player receives its value of the winner.
NormalFormGame majority_voting(int players, int alternatives,
                               std::uint64_t seed);

// Single-choice congestion game, players >= 2, facilities >= 2. Facility j
// has cost a_j * load with a_j drawn Uniform[0.1, 1] from Rng(seed);
// utility is 1 - cost / (players * max_j a_j), which lands in [0,1]. A pure
// equilibrium always exists (exact potential game).
NormalFormGame congestion_game(int players, int facilities,
                               std::uint64_t seed);

// Pure coordination: every player receives 1 when all actions match and 0
// otherwise; the all-match profiles are the m pure equilibria.
NormalFormGame coordination_game(int players, int actions);

}  // namespace nashd
