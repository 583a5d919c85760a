#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nashd/game.hpp"

namespace nashd {

// Unconstrained pre-softmax parameters, one real vector per player.
struct LogitProfile {
  std::vector<std::vector<double>> logits;
};

// Gradient-descent hyperparameters. The defaults are the benchmark
// schedule: 1000 iterations, learning rate 0.5 multiplied by 0.8 every
// 100 iterations.
struct GdConfig {
  int max_iters = 1000;
  double initial_lr = 0.5;
  double decay_factor = 0.8;
  int decay_every = 100;
  std::uint64_t seed = 0;
  // When set, the loop stops as soon as the recorded epsilon drops to or
  // below this value.
  std::optional<double> early_stop_eps{};
  enum class Report { final_iterate, best_iterate };
  Report report = Report::final_iterate;
};

struct TraceRecord {
  int iteration;
  double nashd;
  double epsilon;
};

// Everything a solve run produces: the per-iterate history, the ending
// profile (softmax of the logits after the last update), and the iterate
// with the smallest epsilon seen.
struct SolveTrace {
  std::vector<TraceRecord> records;
  StrategyProfile final_profile;
  double final_nashd = 0.0;
  double final_epsilon = 0.0;
  StrategyProfile best_profile;
  double best_epsilon = 0.0;
  int best_iteration = 0;
  int iterations_run = 0;
  double wall_ms = 0.0;
  GdConfig::Report report = GdConfig::Report::final_iterate;

  const StrategyProfile& reported_profile() const {
    return report == GdConfig::Report::best_iterate ? best_profile
                                                    : final_profile;
  }
  double reported_epsilon() const {
    return report == GdConfig::Report::best_iterate ? best_epsilon
                                                    : final_epsilon;
  }
};

// Appends a fictitious player with a single action whose payoff at every
// pure profile is minus the sum of all other payoffs, making the extended
// game zero-sum.
NormalFormGame zero_sum_extend(const NormalFormGame& game);

// Distance to Nash equilibrium: the sum over players of
// max_a u_i(a, sigma_{-i}) evaluated on the zero-sum extension. The
// fictitious player is folded in analytically, which reduces the value to
// the sum of per-player regrets of the original game:
//   NashD(sigma) = sum_i [ max_a u_i(a, sigma_{-i}) - u_i(sigma) ].
// Nonnegative (negative floating-point residue clamped), and zero exactly
// at Nash equilibria.
double nashd(const NormalFormGame& game, const StrategyProfile& sigma);

// Numerically safe softmax (max-subtracted): nonnegative, sums to 1,
// invariant to adding a constant to all entries.
std::vector<double> softmax(std::span<const double> logits);

// Applies softmax per player block. Throws std::invalid_argument if any
// logit is not finite.
StrategyProfile softmax_profile(const LogitProfile& z);

// Subgradient of nashd(softmax(z)) with respect to the logits z.
//
// In strategy space, with l*_i the lowest-index maximizer of player i's
// deviation payoffs,
//   d NashD / d sigma_{jk} = sum_{i != j} u_i(a_{i,l*}, a_{jk}, sigma_-(i,j))
//                          - sum_i       u_i(a_{jk}, sigma_{-j}),
// where the first sum differentiates the per-player max terms and the
// second comes from the fictitious player's payoff. The result is then
// chained through the softmax Jacobian, so each player block of the
// returned gradient is orthogonal to the all-ones vector.
LogitProfile nashd_subgradient(const NormalFormGame& game,
                               const LogitProfile& z);

// Upper bound 2 U N (|A_1| + ... + |A_N|) on the Lipschitz constant of the
// NashD gradient, with U the largest payoff magnitude. Computed on the
// game as given; the fictitious player has a single action and carries no
// parameters, so it does not enter the action-count sum.
double lipschitz_bound(const NormalFormGame& game);

// Gradient descent on NashD through the softmax parameterization.
// The game is normalized into [0,1] first. Logits start i.i.d. standard
// normal from config.seed; iterate t records NashD and epsilon of
// softmax(z^t) and then steps with learning rate
// initial_lr * decay_factor^floor(t / decay_every). Deterministic for a
// fixed (game, config).
SolveTrace solve_nashd_gd(const NormalFormGame& game, const GdConfig& config);

}  // namespace nashd
