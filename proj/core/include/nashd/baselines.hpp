#pragma once

#include <cstdint>
#include <vector>

#include "nashd/game.hpp"

namespace nashd {

struct PlaySample {
  int round;  // number of completed rounds at the sample
  double nashd;
  double epsilon;
};

struct PlayTrace {
  std::vector<PlaySample> samples;
  StrategyProfile output;
  double output_epsilon = 0.0;
  int rounds_run = 0;
  double wall_ms = 0.0;
};

// Fictitious play. Every player starts by playing its lowest-index action
// (round 0, which seeds the opponent model only); in each of the `rounds`
// rounds that follow, all players simultaneously play a pure best response
// to the product of opponents' empirical marginal frequencies, breaking
// ties toward the lowest action index. The output is the empirical
// marginal profile of the best-response rounds. The game is normalized
// internally. Deterministic; `seed` is accepted for interface uniformity
// but unused. Samples are taken every `sample_every` completed rounds and
// at the final round.
PlayTrace solve_fictitious_play(const NormalFormGame& game, int rounds,
                                std::uint64_t seed, int sample_every = 10);

// Regret matching with expected (full-feedback) updates: each round every
// player accumulates instantaneous regrets u_i(a, sigma_{-i}) - u_i(sigma)
// against the current mixed strategies, then plays proportionally to the
// positive part of its cumulative regrets (exactly uniform while none are
// positive). The output is the arithmetic mean of the played strategies.
// The game is normalized internally. Deterministic; `seed` unused.
PlayTrace solve_regret_matching(const NormalFormGame& game, int rounds,
                                std::uint64_t seed, int sample_every = 10);

}  // namespace nashd
