#include "nashd/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nashd/rng.hpp"

namespace nashd {

namespace {

// players * actions^players, guarded against kMaxPayoffEntries.
std::size_t checked_entry_count(int players, int actions) {
  std::size_t profiles = 1;
  for (int i = 0; i < players; ++i) {
    if (profiles > kMaxPayoffEntries / static_cast<std::size_t>(actions)) {
      throw std::length_error("game capacity exceeded: " +
                              std::to_string(players) + " players with " +
                              std::to_string(actions) +
                              " actions each need more than " +
                              std::to_string(kMaxPayoffEntries) +
                              " payoff entries");
    }
    profiles *= static_cast<std::size_t>(actions);
  }
  if (profiles > kMaxPayoffEntries / static_cast<std::size_t>(players)) {
    throw std::length_error("game capacity exceeded: " +
                            std::to_string(players) + " players with " +
                            std::to_string(actions) +
                            " actions each need more than " +
                            std::to_string(kMaxPayoffEntries) +
                            " payoff entries");
  }
  return profiles;
}

// Walks all pure profiles of a uniform (players x actions) grid in flat
// layout order and invokes fn(profile, offset).
template <typename Fn>
void for_each_profile(int players, int actions, Fn&& fn) {
  PureProfile profile(static_cast<std::size_t>(players), 0);
  std::size_t offset = 0;
  while (true) {
    fn(profile, offset);
    ++offset;
    int axis = players - 1;
    while (axis >= 0) {
      if (++profile[static_cast<std::size_t>(axis)] < actions) break;
      profile[static_cast<std::size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
}

}  // namespace

GameClass parse_game_class(const std::string& name) {
  if (name == "random") return GameClass::random;
  if (name == "prisoners_dilemma_n") return GameClass::prisoners_dilemma_n;
  if (name == "majority_voting") return GameClass::majority_voting;
  if (name == "congestion") return GameClass::congestion;
  if (name == "coordination") return GameClass::coordination;
  throw std::invalid_argument("unknown game class: " + name);
}

std::string to_string(GameClass game_class) {
  switch (game_class) {
    case GameClass::random: return "random";
    case GameClass::prisoners_dilemma_n: return "prisoners_dilemma_n";
    case GameClass::majority_voting: return "majority_voting";
    case GameClass::congestion: return "congestion";
    case GameClass::coordination: return "coordination";
  }
  throw std::invalid_argument("unknown game class value");
}

NormalFormGame make_game(const GameSpec& spec) {
  switch (spec.class_name) {
    case GameClass::random:
      return random_game(spec.num_players, spec.actions_per_player, spec.seed);
    case GameClass::prisoners_dilemma_n:
      return prisoners_dilemma_n(spec.num_players);
    case GameClass::majority_voting:
      return majority_voting(spec.num_players, spec.actions_per_player,
                             spec.seed);
    case GameClass::congestion:
      return congestion_game(spec.num_players, spec.actions_per_player,
                             spec.seed);
    case GameClass::coordination:
      return coordination_game(spec.num_players, spec.actions_per_player);
  }
  throw std::invalid_argument("unknown game class value");
}

NormalFormGame random_game(int players, int actions, std::uint64_t seed) {
  if (players < 1) throw std::out_of_range("random_game needs players >= 1");
  if (actions < 2) throw std::out_of_range("random_game needs actions >= 2");
  const std::size_t profiles = checked_entry_count(players, actions);
  Rng rng(seed);
  std::vector<std::vector<double>> payoffs;
  payoffs.reserve(static_cast<std::size_t>(players));
  for (int i = 0; i < players; ++i) {
    std::vector<double> tensor(profiles);
    for (double& v : tensor) {
      v = rng.uniform();
    }
    payoffs.push_back(std::move(tensor));
  }
  std::vector<int> counts(static_cast<std::size_t>(players), actions);
  return NormalFormGame(std::move(counts), std::move(payoffs),
                        "random-" + std::to_string(players) + "x" +
                            std::to_string(actions) + "-" +
                            std::to_string(seed));
}

NormalFormGame prisoners_dilemma_n(int players) {
  if (players < 2 || players > 20) {
    throw std::out_of_range("prisoners_dilemma_n needs 2 <= players <= 20");
  }
  constexpr double kBenefit = 1.0;
  constexpr double kCost = 0.4;
  const std::size_t profiles = checked_entry_count(players, 2);
  std::vector<std::vector<double>> payoffs(
      static_cast<std::size_t>(players), std::vector<double>(profiles, 0.0));
  for_each_profile(players, 2, [&](const PureProfile& a, std::size_t offset) {
    int cooperators = 0;
    for (int act : a) {
      if (act == 0) ++cooperators;
    }
    for (int i = 0; i < players; ++i) {
      const bool coop = a[static_cast<std::size_t>(i)] == 0;
      const int others = cooperators - (coop ? 1 : 0);
      payoffs[static_cast<std::size_t>(i)][offset] =
          kBenefit * others / (players - 1) - (coop ? kCost : 0.0);
    }
  });
  NormalFormGame raw(std::vector<int>(static_cast<std::size_t>(players), 2),
                     std::move(payoffs),
                     "prisoners_dilemma_n-" + std::to_string(players));
  return normalize(raw);
}

NormalFormGame majority_voting(int players, int alternatives,
                               std::uint64_t seed) {
  if (players < 3) throw std::out_of_range("majority_voting needs players >= 3");
  if (alternatives < 2) {
    throw std::out_of_range("majority_voting needs alternatives >= 2");
  }
  const std::size_t profiles = checked_entry_count(players, alternatives);
  Rng rng(seed);
  std::vector<std::vector<double>> values(static_cast<std::size_t>(players));
  for (auto& row : values) {
    row.resize(static_cast<std::size_t>(alternatives));
    for (double& v : row) {
      v = rng.uniform();
    }
  }
  std::vector<std::vector<double>> payoffs(
      static_cast<std::size_t>(players), std::vector<double>(profiles, 0.0));
  std::vector<int> votes(static_cast<std::size_t>(alternatives), 0);
  for_each_profile(players, alternatives,
                   [&](const PureProfile& a, std::size_t offset) {
    std::fill(votes.begin(), votes.end(), 0);
    for (int choice : a) {
      ++votes[static_cast<std::size_t>(choice)];
    }
    int winner = 0;
    for (int j = 1; j < alternatives; ++j) {
      if (votes[static_cast<std::size_t>(j)] >
          votes[static_cast<std::size_t>(winner)]) {
        winner = j;
      }
    }
    for (int i = 0; i < players; ++i) {
      payoffs[static_cast<std::size_t>(i)][offset] =
          values[static_cast<std::size_t>(i)][static_cast<std::size_t>(winner)];
    }
  });
  return NormalFormGame(
      std::vector<int>(static_cast<std::size_t>(players), alternatives),
      std::move(payoffs),
      "majority_voting-" + std::to_string(players) + "x" +
          std::to_string(alternatives) + "-" + std::to_string(seed));
}

NormalFormGame congestion_game(int players, int facilities,
                               std::uint64_t seed) {
  if (players < 2) throw std::out_of_range("congestion needs players >= 2");
  if (facilities < 2) throw std::out_of_range("congestion needs facilities >= 2");
  const std::size_t profiles = checked_entry_count(players, facilities);
  Rng rng(seed);
  std::vector<double> rate(static_cast<std::size_t>(facilities));
  for (double& a : rate) {
    a = rng.uniform(0.1, 1.0);
  }
  const double max_cost =
      players * *std::max_element(rate.begin(), rate.end());
  std::vector<std::vector<double>> payoffs(
      static_cast<std::size_t>(players), std::vector<double>(profiles, 0.0));
  std::vector<int> load(static_cast<std::size_t>(facilities), 0);
  for_each_profile(players, facilities,
                   [&](const PureProfile& a, std::size_t offset) {
    std::fill(load.begin(), load.end(), 0);
    for (int choice : a) {
      ++load[static_cast<std::size_t>(choice)];
    }
    for (int i = 0; i < players; ++i) {
      const int f = a[static_cast<std::size_t>(i)];
      const double cost =
          rate[static_cast<std::size_t>(f)] * load[static_cast<std::size_t>(f)];
      payoffs[static_cast<std::size_t>(i)][offset] =
          std::clamp(1.0 - cost / max_cost, 0.0, 1.0);
    }
  });
  return NormalFormGame(
      std::vector<int>(static_cast<std::size_t>(players), facilities),
      std::move(payoffs),
      "congestion-" + std::to_string(players) + "x" +
          std::to_string(facilities) + "-" + std::to_string(seed));
}

NormalFormGame coordination_game(int players, int actions) {
  if (players < 2) throw std::out_of_range("coordination needs players >= 2");
  if (actions < 2) throw std::out_of_range("coordination needs actions >= 2");
  const std::size_t profiles = checked_entry_count(players, actions);
  std::vector<std::vector<double>> payoffs(
      static_cast<std::size_t>(players), std::vector<double>(profiles, 0.0));
  for_each_profile(players, actions,
                   [&](const PureProfile& a, std::size_t offset) {
    const bool match = std::all_of(a.begin(), a.end(),
                                   [&](int act) { return act == a[0]; });
    if (match) {
      for (int i = 0; i < players; ++i) {
        payoffs[static_cast<std::size_t>(i)][offset] = 1.0;
      }
    }
  });
  return NormalFormGame(
      std::vector<int>(static_cast<std::size_t>(players), actions),
      std::move(payoffs),
      "coordination-" + std::to_string(players) + "x" +
          std::to_string(actions));
}

}  // namespace nashd
