#include "nashd/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "contraction.hpp"

namespace nashd {

namespace {

void check_player(const NormalFormGame& game, int player) {
  if (player < 0 || player >= game.num_players()) {
    throw std::out_of_range("player index " + std::to_string(player) +
                            " out of range for " +
                            std::to_string(game.num_players()) + " players");
  }
}

void check_shape(const NormalFormGame& game, const StrategyProfile& sigma) {
  if (sigma.num_players() != game.num_players()) {
    throw std::invalid_argument(
        "strategy profile has " + std::to_string(sigma.num_players()) +
        " players, game has " + std::to_string(game.num_players()));
  }
  for (int i = 0; i < game.num_players(); ++i) {
    if (static_cast<int>(sigma.strategy(i).size()) != game.num_actions(i)) {
      throw std::invalid_argument(
          "strategy for player " + std::to_string(i) + " has " +
          std::to_string(sigma.strategy(i).size()) + " entries, expected " +
          std::to_string(game.num_actions(i)));
    }
  }
}

}  // namespace

NormalFormGame::NormalFormGame(std::vector<int> action_counts,
                               std::vector<std::vector<double>> payoffs,
                               std::string name)
    : action_counts_(std::move(action_counts)),
      payoffs_(std::move(payoffs)),
      name_(std::move(name)) {
  if (action_counts_.empty()) {
    throw std::invalid_argument("game needs at least one player");
  }
  for (int m : action_counts_) {
    if (m < 1) {
      throw std::invalid_argument("action counts must be positive");
    }
    num_profiles_ *= static_cast<std::size_t>(m);
  }
  if (payoffs_.size() != action_counts_.size()) {
    throw std::invalid_argument("expected one payoff tensor per player");
  }
  for (const auto& tensor : payoffs_) {
    if (tensor.size() != num_profiles_) {
      throw std::invalid_argument(
          "payoff tensor has " + std::to_string(tensor.size()) +
          " entries, expected " + std::to_string(num_profiles_));
    }
    for (double v : tensor) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("payoff entries must be finite");
      }
    }
  }
}

int NormalFormGame::num_actions(int player) const {
  check_player(*this, player);
  return action_counts_[static_cast<std::size_t>(player)];
}

const std::vector<double>& NormalFormGame::payoffs(int player) const {
  check_player(*this, player);
  return payoffs_[static_cast<std::size_t>(player)];
}

std::size_t NormalFormGame::index_of(const PureProfile& actions) const {
  if (actions.size() != action_counts_.size()) {
    throw std::out_of_range("pure profile has " +
                            std::to_string(actions.size()) +
                            " actions, expected " +
                            std::to_string(action_counts_.size()));
  }
  std::size_t offset = 0;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (actions[i] < 0 || actions[i] >= action_counts_[i]) {
      throw std::out_of_range("action " + std::to_string(actions[i]) +
                              " out of range for player " + std::to_string(i));
    }
    offset = offset * static_cast<std::size_t>(action_counts_[i]) +
             static_cast<std::size_t>(actions[i]);
  }
  return offset;
}

StrategyProfile::StrategyProfile(std::vector<std::vector<double>> strategies)
    : strategies_(std::move(strategies)) {
  if (strategies_.empty()) {
    throw std::invalid_argument("strategy profile needs at least one player");
  }
  for (auto& s : strategies_) {
    if (s.empty()) {
      throw std::invalid_argument("strategy vectors must be nonempty");
    }
    double sum = 0.0;
    for (double p : s) {
      if (!std::isfinite(p) || p < 0.0) {
        throw std::invalid_argument(
            "strategy entries must be finite and nonnegative");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kSimplexTolerance) {
      throw std::invalid_argument("strategy sums to " + std::to_string(sum) +
                                  ", outside the simplex tolerance");
    }
    for (double& p : s) {
      p /= sum;
    }
  }
}

const std::vector<double>& StrategyProfile::strategy(int player) const {
  if (player < 0 || player >= num_players()) {
    throw std::out_of_range("player index out of range");
  }
  return strategies_[static_cast<std::size_t>(player)];
}

double pure_payoff(const NormalFormGame& game, int player,
                   const PureProfile& actions) {
  check_player(game, player);
  return game.payoffs(player)[game.index_of(actions)];
}

double expected_utility(const NormalFormGame& game, int player,
                        const StrategyProfile& sigma) {
  check_player(game, player);
  check_shape(game, sigma);
  auto scalar = detail::contract_except(game.payoffs(player),
                                        game.action_counts(), {},
                                        sigma.strategies());
  return scalar[0];
}

std::vector<double> deviation_payoffs(const NormalFormGame& game, int player,
                                      const StrategyProfile& sigma) {
  check_player(game, player);
  check_shape(game, sigma);
  const int keep[] = {player};
  return detail::contract_except(game.payoffs(player), game.action_counts(),
                                 keep, sigma.strategies());
}

double epsilon(const NormalFormGame& game, const StrategyProfile& sigma) {
  check_shape(game, sigma);
  double worst = 0.0;
  for (int i = 0; i < game.num_players(); ++i) {
    const auto dev = deviation_payoffs(game, i, sigma);
    double best = dev[0];
    double value = 0.0;
    const auto& s = sigma.strategy(i);
    for (std::size_t k = 0; k < dev.size(); ++k) {
      best = std::max(best, dev[k]);
      value += s[k] * dev[k];
    }
    worst = std::max(worst, best - value);
  }
  return std::max(worst, 0.0);
}

NormalFormGame normalize(const NormalFormGame& game) {
  std::vector<std::vector<double>> scaled;
  scaled.reserve(static_cast<std::size_t>(game.num_players()));
  for (int i = 0; i < game.num_players(); ++i) {
    const auto& tensor = game.payoffs(i);
    const auto [lo_it, hi_it] = std::minmax_element(tensor.begin(),
                                                    tensor.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    std::vector<double> out(tensor.size());
    if (hi > lo) {
      const double span = hi - lo;
      for (std::size_t k = 0; k < tensor.size(); ++k) {
        out[k] = (tensor[k] - lo) / span;
      }
    }
    scaled.push_back(std::move(out));
  }
  return NormalFormGame(game.action_counts(), std::move(scaled), game.name());
}

StrategyProfile uniform_profile(const NormalFormGame& game) {
  std::vector<std::vector<double>> s;
  s.reserve(static_cast<std::size_t>(game.num_players()));
  for (int m : game.action_counts()) {
    s.emplace_back(static_cast<std::size_t>(m), 1.0 / m);
  }
  return StrategyProfile(std::move(s));
}

StrategyProfile pure_strategy_profile(const NormalFormGame& game,
                                      const PureProfile& actions) {
  game.index_of(actions);  // range-checks
  std::vector<std::vector<double>> s;
  s.reserve(static_cast<std::size_t>(game.num_players()));
  for (int i = 0; i < game.num_players(); ++i) {
    std::vector<double> v(static_cast<std::size_t>(game.num_actions(i)), 0.0);
    v[static_cast<std::size_t>(actions[static_cast<std::size_t>(i)])] = 1.0;
    s.push_back(std::move(v));
  }
  return StrategyProfile(std::move(s));
}

}  // namespace nashd
