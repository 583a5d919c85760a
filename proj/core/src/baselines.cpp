#include "nashd/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "nashd/solver.hpp"

namespace nashd {

namespace {

void check_rounds(int rounds, int sample_every) {
  if (rounds < 1) {
    throw std::invalid_argument("rounds must be at least 1");
  }
  if (sample_every < 1) {
    throw std::invalid_argument("sample_every must be at least 1");
  }
}

struct SampledEval {
  double nashd;
  double epsilon;
};

SampledEval eval_output(const NormalFormGame& game,
                        const StrategyProfile& sigma) {
  return {nashd(game, sigma), epsilon(game, sigma)};
}

}  // namespace

PlayTrace solve_fictitious_play(const NormalFormGame& raw_game, int rounds,
                                std::uint64_t /*seed*/, int sample_every) {
  check_rounds(rounds, sample_every);
  const auto start = std::chrono::steady_clock::now();
  const NormalFormGame game = normalize(raw_game);
  const int n = game.num_players();

  // Round 0: lowest-index actions, counted in beliefs but not in the output.
  std::vector<std::vector<double>> beliefs;
  std::vector<std::vector<double>> plays;
  for (int i = 0; i < n; ++i) {
    beliefs.emplace_back(static_cast<std::size_t>(game.num_actions(i)), 0.0);
    plays.emplace_back(static_cast<std::size_t>(game.num_actions(i)), 0.0);
    beliefs.back()[0] = 1.0;
  }

  std::vector<PlaySample> samples;
  std::vector<int> brs(static_cast<std::size_t>(n));
  for (int round = 1; round <= rounds; ++round) {
    std::vector<std::vector<double>> freq = beliefs;
    for (auto& f : freq) {
      double total = 0.0;
      for (double c : f) total += c;
      for (double& c : f) c /= total;
    }
    const StrategyProfile model(std::move(freq));
    for (int i = 0; i < n; ++i) {
      const auto dev = deviation_payoffs(game, i, model);
      int best = 0;
      for (std::size_t k = 1; k < dev.size(); ++k) {
        if (dev[k] > dev[static_cast<std::size_t>(best)]) {
          best = static_cast<int>(k);
        }
      }
      brs[static_cast<std::size_t>(i)] = best;
    }
    for (int i = 0; i < n; ++i) {
      beliefs[static_cast<std::size_t>(i)]
             [static_cast<std::size_t>(brs[static_cast<std::size_t>(i)])] += 1.0;
      plays[static_cast<std::size_t>(i)]
           [static_cast<std::size_t>(brs[static_cast<std::size_t>(i)])] += 1.0;
    }
    if (round % sample_every == 0 || round == rounds) {
      std::vector<std::vector<double>> marg = plays;
      for (auto& f : marg) {
        for (double& c : f) c /= round;
      }
      const StrategyProfile out(std::move(marg));
      const auto ev = eval_output(game, out);
      samples.push_back({round, ev.nashd, ev.epsilon});
    }
  }

  std::vector<std::vector<double>> marg = std::move(plays);
  for (auto& f : marg) {
    for (double& c : f) c /= rounds;
  }
  StrategyProfile output(std::move(marg));
  const double out_eps = epsilon(game, output);
  const auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - start);
  return PlayTrace{.samples = std::move(samples),
                   .output = std::move(output),
                   .output_epsilon = out_eps,
                   .rounds_run = rounds,
                   .wall_ms = elapsed.count()};
}

PlayTrace solve_regret_matching(const NormalFormGame& raw_game, int rounds,
                                std::uint64_t /*seed*/, int sample_every) {
  check_rounds(rounds, sample_every);
  const auto start = std::chrono::steady_clock::now();
  const NormalFormGame game = normalize(raw_game);
  const int n = game.num_players();

  std::vector<std::vector<double>> cum;
  std::vector<std::vector<double>> sum;
  for (int i = 0; i < n; ++i) {
    cum.emplace_back(static_cast<std::size_t>(game.num_actions(i)), 0.0);
    sum.emplace_back(static_cast<std::size_t>(game.num_actions(i)), 0.0);
  }

  std::vector<PlaySample> samples;
  for (int t = 0; t < rounds; ++t) {
    std::vector<std::vector<double>> strat;
    strat.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const auto& c = cum[static_cast<std::size_t>(i)];
      double pos_total = 0.0;
      std::vector<double> s(c.size());
      for (std::size_t k = 0; k < c.size(); ++k) {
        s[k] = std::max(c[k], 0.0);
        pos_total += s[k];
      }
      if (pos_total > 0.0) {
        for (double& v : s) v /= pos_total;
      } else {
        std::fill(s.begin(), s.end(), 1.0 / static_cast<double>(s.size()));
      }
      strat.push_back(std::move(s));
    }
    for (int i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < strat[static_cast<std::size_t>(i)].size();
           ++k) {
        sum[static_cast<std::size_t>(i)][k] +=
            strat[static_cast<std::size_t>(i)][k];
      }
    }
    const StrategyProfile sigma(std::move(strat));
    for (int i = 0; i < n; ++i) {
      const auto dev = deviation_payoffs(game, i, sigma);
      double value = 0.0;
      const auto& s = sigma.strategy(i);
      for (std::size_t k = 0; k < dev.size(); ++k) {
        value += s[k] * dev[k];
      }
      auto& c = cum[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; k < dev.size(); ++k) {
        c[k] += dev[k] - value;
      }
    }
    const int completed = t + 1;
    if (completed % sample_every == 0 || completed == rounds) {
      std::vector<std::vector<double>> avg = sum;
      for (auto& f : avg) {
        for (double& v : f) v /= completed;
      }
      const StrategyProfile out(std::move(avg));
      const auto ev = eval_output(game, out);
      samples.push_back({completed, ev.nashd, ev.epsilon});
    }
  }

  std::vector<std::vector<double>> avg = std::move(sum);
  for (auto& f : avg) {
    for (double& v : f) v /= rounds;
  }
  StrategyProfile output(std::move(avg));
  const double out_eps = epsilon(game, output);
  const auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - start);
  return PlayTrace{.samples = std::move(samples),
                   .output = std::move(output),
                   .output_epsilon = out_eps,
                   .rounds_run = rounds,
                   .wall_ms = elapsed.count()};
}

}  // namespace nashd
