#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nashd {

// One joint pure action, actions[i] in [0, |A_i|).
using PureProfile = std::vector<int>;

// Absolute tolerance for simplex validation (|sum - 1| must stay below it);
// vectors inside the tolerance are renormalized, not rejected, because
// softmax output carries rounding error.
inline constexpr double kSimplexTolerance = 1e-9;

// An N-player normal-form game: per-player action counts and one flat
// payoff tensor per player.
//
// Tensor layout: entry for pure profile (a_0, ..., a_{N-1}) lives at
//   offset = ((a_0 * |A_1| + a_1) * |A_2| + a_2) ...
// i.e. row-major with player 0's action the slowest-varying axis. This is
// the single in-memory order used everywhere; the .nfg file order differs
// (first player fastest) and is remapped by the nfg module.
//
// Games are immutable after construction and safe to share across threads.
class NormalFormGame {
 public:
  NormalFormGame(std::vector<int> action_counts,
                 std::vector<std::vector<double>> payoffs,
                 std::string name = "");

  int num_players() const { return static_cast<int>(action_counts_.size()); }
  const std::vector<int>& action_counts() const { return action_counts_; }
  int num_actions(int player) const;
  // Number of pure profiles, i.e. the product of all action counts.
  std::size_t num_profiles() const { return num_profiles_; }
  const std::vector<double>& payoffs(int player) const;
  const std::string& name() const { return name_; }

  // Flat offset of a pure profile in the layout documented above.
  // Throws std::out_of_range on a bad length or action index.
  std::size_t index_of(const PureProfile& actions) const;

 private:
  std::vector<int> action_counts_;
  std::vector<std::vector<double>> payoffs_;
  std::string name_;
  std::size_t num_profiles_ = 1;
};

// One mixed strategy per player. Construction validates lengths against
// nothing (game-shape checks happen at the operations), requires finite
// nonnegative entries summing to 1 within kSimplexTolerance, and
// renormalizes each vector to sum exactly to its own total.
class StrategyProfile {
 public:
  explicit StrategyProfile(std::vector<std::vector<double>> strategies);

  int num_players() const { return static_cast<int>(strategies_.size()); }
  const std::vector<double>& strategy(int player) const;
  const std::vector<std::vector<double>>& strategies() const {
    return strategies_;
  }

 private:
  std::vector<std::vector<double>> strategies_;
};

// Stored payoff u_i(a). Throws std::out_of_range for a bad player or profile.
double pure_payoff(const NormalFormGame& game, int player,
                   const PureProfile& actions);

// Expected utility u_i(sigma) of the full mixed profile. Contracts the
// payoff tensor one opponent axis at a time, so the cost is O(prod |A_j|)
// rather than one full tensor walk per pure profile.
double expected_utility(const NormalFormGame& game, int player,
                        const StrategyProfile& sigma);

// The vector (u_i(a_k, sigma_{-i}))_k of payoffs for each pure deviation of
// `player`; its max is the best-response value. Does not depend on
// sigma's own component for `player`.
std::vector<double> deviation_payoffs(const NormalFormGame& game, int player,
                                      const StrategyProfile& sigma);

// Exploitability: the largest gain any single player can obtain by
// deviating unilaterally (pure deviations suffice). Nonnegative; zero
// exactly at Nash equilibria. Negative floating-point residue is clamped
// to zero.
double epsilon(const NormalFormGame& game, const StrategyProfile& sigma);

// Per player independently maps payoffs through (u - min) / (max - min)
// into [0, 1]. A constant tensor maps to all zeros (every strategy is a
// best response for that player, so its epsilon contribution stays null).
// Best-response argmax sets are preserved per player.
NormalFormGame normalize(const NormalFormGame& game);

// Convenience constructors for common profiles.
StrategyProfile uniform_profile(const NormalFormGame& game);
StrategyProfile pure_strategy_profile(const NormalFormGame& game,
                                      const PureProfile& actions);

}  // namespace nashd
