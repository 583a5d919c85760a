#include "nashd/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "contraction.hpp"
#include "nashd/rng.hpp"

namespace nashd {

namespace {

void check_logit_shape(const NormalFormGame& game, const LogitProfile& z) {
  if (static_cast<int>(z.logits.size()) != game.num_players()) {
    throw std::invalid_argument(
        "logit profile has " + std::to_string(z.logits.size()) +
        " players, game has " + std::to_string(game.num_players()));
  }
  for (int i = 0; i < game.num_players(); ++i) {
    const auto& block = z.logits[static_cast<std::size_t>(i)];
    if (static_cast<int>(block.size()) != game.num_actions(i)) {
      throw std::invalid_argument("logit block " + std::to_string(i) +
                                  " has wrong length");
    }
    for (double v : block) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("logits must be finite");
      }
    }
  }
}

struct IterateEval {
  double nashd = 0.0;
  double epsilon = 0.0;
  std::vector<std::vector<double>> devs;  // deviation payoffs per player
  std::vector<int> argmax;                // lowest-index maximizer per player
};

IterateEval evaluate(const NormalFormGame& game, const StrategyProfile& sigma) {
  IterateEval ev;
  const int n = game.num_players();
  ev.devs.reserve(static_cast<std::size_t>(n));
  ev.argmax.resize(static_cast<std::size_t>(n));
  double regret_sum = 0.0;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    auto dev = deviation_payoffs(game, i, sigma);
    int best = 0;
    double value = 0.0;
    const auto& s = sigma.strategy(i);
    for (std::size_t k = 0; k < dev.size(); ++k) {
      if (dev[k] > dev[static_cast<std::size_t>(best)]) {
        best = static_cast<int>(k);
      }
      value += s[k] * dev[k];
    }
    const double regret = dev[static_cast<std::size_t>(best)] - value;
    regret_sum += regret;
    worst = std::max(worst, regret);
    ev.argmax[static_cast<std::size_t>(i)] = best;
    ev.devs.push_back(std::move(dev));
  }
  ev.nashd = std::max(regret_sum, 0.0);
  ev.epsilon = std::max(worst, 0.0);
  return ev;
}

// Gradient of NashD in strategy space, given the deviation payoffs and
// argmaxes of the current iterate.
std::vector<std::vector<double>> strategy_gradient(const NormalFormGame& game,
                                                   const StrategyProfile& sigma,
                                                   const IterateEval& ev) {
  const int n = game.num_players();
  std::vector<std::vector<double>> grad;
  grad.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int mj = game.num_actions(j);
    // i = j part of the fictitious-player sum.
    std::vector<double> g(static_cast<std::size_t>(mj));
    for (int k = 0; k < mj; ++k) {
      g[static_cast<std::size_t>(k)] =
          -ev.devs[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    }
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      const int mi = game.num_actions(i);
      const int lo = std::min(i, j);
      const int hi = std::max(i, j);
      const int keep[] = {lo, hi};
      // u_i kept over axes (a_i, a_j); everything else contracted.
      const auto pair = detail::contract_except(
          game.payoffs(i), game.action_counts(), keep, sigma.strategies());
      const int lstar = ev.argmax[static_cast<std::size_t>(i)];
      const auto& si = sigma.strategy(i);
      for (int k = 0; k < mj; ++k) {
        // pair is row-major over (A_lo, A_hi).
        double max_term = 0.0;
        double mean_term = 0.0;
        if (i == lo) {
          const std::size_t row = static_cast<std::size_t>(lstar) *
                                  static_cast<std::size_t>(mj);
          max_term = pair[row + static_cast<std::size_t>(k)];
          for (int l = 0; l < mi; ++l) {
            mean_term += si[static_cast<std::size_t>(l)] *
                         pair[static_cast<std::size_t>(l) *
                                  static_cast<std::size_t>(mj) +
                              static_cast<std::size_t>(k)];
          }
        } else {
          const std::size_t row = static_cast<std::size_t>(k) *
                                  static_cast<std::size_t>(mi);
          max_term = pair[row + static_cast<std::size_t>(lstar)];
          for (int l = 0; l < mi; ++l) {
            mean_term += si[static_cast<std::size_t>(l)] *
                         pair[row + static_cast<std::size_t>(l)];
          }
        }
        g[static_cast<std::size_t>(k)] += max_term - mean_term;
      }
    }
    grad.push_back(std::move(g));
  }
  return grad;
}

// Chain rule through the softmax Jacobian:
//   dz_m = sigma_m * (g_m - <g, sigma>).
std::vector<double> chain_softmax(const std::vector<double>& sigma,
                                  const std::vector<double>& g) {
  double dot = 0.0;
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    dot += sigma[k] * g[k];
  }
  std::vector<double> out(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    out[k] = sigma[k] * (g[k] - dot);
  }
  return out;
}

}  // namespace

NormalFormGame zero_sum_extend(const NormalFormGame& game) {
  std::vector<int> counts = game.action_counts();
  counts.push_back(1);
  std::vector<std::vector<double>> payoffs;
  payoffs.reserve(static_cast<std::size_t>(game.num_players()) + 1);
  for (int i = 0; i < game.num_players(); ++i) {
    payoffs.push_back(game.payoffs(i));
  }
  std::vector<double> fictitious(game.num_profiles(), 0.0);
  for (int i = 0; i < game.num_players(); ++i) {
    const auto& tensor = game.payoffs(i);
    for (std::size_t k = 0; k < tensor.size(); ++k) {
      fictitious[k] -= tensor[k];
    }
  }
  payoffs.push_back(std::move(fictitious));
  return NormalFormGame(std::move(counts), std::move(payoffs), game.name());
}

double nashd(const NormalFormGame& game, const StrategyProfile& sigma) {
  return evaluate(game, sigma).nashd;
}

std::vector<double> softmax(std::span<const double> logits) {
  double top = logits[0];
  for (double v : logits) {
    top = std::max(top, v);
  }
  std::vector<double> out(logits.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < logits.size(); ++k) {
    out[k] = std::exp(logits[k] - top);
    sum += out[k];
  }
  for (double& v : out) {
    v /= sum;
  }
  return out;
}

StrategyProfile softmax_profile(const LogitProfile& z) {
  std::vector<std::vector<double>> s;
  s.reserve(z.logits.size());
  for (const auto& block : z.logits) {
    if (block.empty()) {
      throw std::invalid_argument("logit blocks must be nonempty");
    }
    for (double v : block) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("logits must be finite");
      }
    }
    s.push_back(softmax(block));
  }
  return StrategyProfile(std::move(s));
}

LogitProfile nashd_subgradient(const NormalFormGame& game,
                               const LogitProfile& z) {
  check_logit_shape(game, z);
  const StrategyProfile sigma = softmax_profile(z);
  const IterateEval ev = evaluate(game, sigma);
  const auto g_sigma = strategy_gradient(game, sigma, ev);
  LogitProfile out;
  out.logits.reserve(g_sigma.size());
  for (int j = 0; j < game.num_players(); ++j) {
    out.logits.push_back(chain_softmax(sigma.strategy(j),
                                       g_sigma[static_cast<std::size_t>(j)]));
  }
  return out;
}

double lipschitz_bound(const NormalFormGame& game) {
  double top = 0.0;
  for (int i = 0; i < game.num_players(); ++i) {
    for (double v : game.payoffs(i)) {
      top = std::max(top, std::abs(v));
    }
  }
  double action_sum = 0.0;
  for (int m : game.action_counts()) {
    action_sum += m;
  }
  return 2.0 * top * game.num_players() * action_sum;
}

SolveTrace solve_nashd_gd(const NormalFormGame& raw_game,
                          const GdConfig& config) {
  if (config.max_iters < 1) {
    throw std::invalid_argument("max_iters must be at least 1");
  }
  if (config.initial_lr <= 0.0) {
    throw std::invalid_argument("initial_lr must be positive");
  }
  if (config.decay_factor <= 0.0 || config.decay_factor > 1.0) {
    throw std::invalid_argument("decay_factor must lie in (0, 1]");
  }
  if (config.decay_every < 1) {
    throw std::invalid_argument("decay_every must be at least 1");
  }
  if (config.early_stop_eps && *config.early_stop_eps < 0.0) {
    throw std::invalid_argument("early_stop_eps must be nonnegative");
  }
  const auto start = std::chrono::steady_clock::now();
  const NormalFormGame game = normalize(raw_game);
  const int n = game.num_players();

  LogitProfile z;
  z.logits.reserve(static_cast<std::size_t>(n));
  Rng rng(config.seed);
  for (int i = 0; i < n; ++i) {
    std::vector<double> block(static_cast<std::size_t>(game.num_actions(i)));
    for (double& v : block) {
      v = rng.normal();
    }
    z.logits.push_back(std::move(block));
  }

  std::vector<TraceRecord> records;
  records.reserve(static_cast<std::size_t>(config.max_iters));
  std::optional<StrategyProfile> best;
  double best_eps = 0.0;
  int best_iter = 0;

  for (int t = 0; t < config.max_iters; ++t) {
    StrategyProfile sigma = softmax_profile(z);
    const IterateEval ev = evaluate(game, sigma);
    records.push_back({t, ev.nashd, ev.epsilon});
    if (!best || ev.epsilon < best_eps) {
      best = sigma;
      best_eps = ev.epsilon;
      best_iter = t;
    }
    if (config.early_stop_eps && ev.epsilon <= *config.early_stop_eps) {
      break;
    }
    const double lr =
        config.initial_lr *
        std::pow(config.decay_factor, static_cast<double>(t / config.decay_every));
    const auto g_sigma = strategy_gradient(game, sigma, ev);
    for (int j = 0; j < n; ++j) {
      const auto gz =
          chain_softmax(sigma.strategy(j), g_sigma[static_cast<std::size_t>(j)]);
      auto& block = z.logits[static_cast<std::size_t>(j)];
      for (std::size_t k = 0; k < block.size(); ++k) {
        block[k] -= lr * gz[k];
      }
    }
  }

  StrategyProfile final_sigma = softmax_profile(z);
  const IterateEval final_ev = evaluate(game, final_sigma);
  if (!best || final_ev.epsilon < best_eps) {
    best = final_sigma;
    best_eps = final_ev.epsilon;
    best_iter = static_cast<int>(records.size());
  }

  const auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - start);
  SolveTrace trace{.records = std::move(records),
                   .final_profile = std::move(final_sigma),
                   .final_nashd = final_ev.nashd,
                   .final_epsilon = final_ev.epsilon,
                   .best_profile = std::move(*best),
                   .best_epsilon = best_eps,
                   .best_iteration = best_iter,
                   .iterations_run = 0,
                   .wall_ms = elapsed.count(),
                   .report = config.report};
  trace.iterations_run = static_cast<int>(trace.records.size());
  return trace;
}

}  // namespace nashd
