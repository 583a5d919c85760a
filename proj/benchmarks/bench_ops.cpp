#include <benchmark/benchmark.h>

#include "nashd/game.hpp"
#include "nashd/generators.hpp"
#include "nashd/solver.hpp"

namespace {

void BM_ExpectedUtility(benchmark::State& state) {
  const int players = static_cast<int>(state.range(0));
  const int actions = static_cast<int>(state.range(1));
  const auto game = nashd::random_game(players, actions, 7);
  const auto sigma = nashd::uniform_profile(game);
  for (auto _ : state) {
    double v = nashd::expected_utility(game, 0, sigma);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ExpectedUtility)
    ->Args({2, 10})
    ->Args({4, 10})
    ->Args({6, 10})
    ->Unit(benchmark::kMicrosecond);

void BM_DeviationPayoffs(benchmark::State& state) {
  const int players = static_cast<int>(state.range(0));
  const int actions = static_cast<int>(state.range(1));
  const auto game = nashd::random_game(players, actions, 7);
  const auto sigma = nashd::uniform_profile(game);
  for (auto _ : state) {
    auto dev = nashd::deviation_payoffs(game, 0, sigma);
    benchmark::DoNotOptimize(dev);
  }
}
BENCHMARK(BM_DeviationPayoffs)
    ->Args({2, 10})
    ->Args({4, 10})
    ->Args({6, 10})
    ->Unit(benchmark::kMicrosecond);

void BM_NashdSubgradient(benchmark::State& state) {
  const int players = static_cast<int>(state.range(0));
  const int actions = static_cast<int>(state.range(1));
  const auto game = nashd::normalize(nashd::random_game(players, actions, 7));
  nashd::LogitProfile z;
  for (int i = 0; i < players; ++i) {
    z.logits.emplace_back(static_cast<std::size_t>(actions), 0.25 * i);
  }
  for (auto _ : state) {
    auto grad = nashd::nashd_subgradient(game, z);
    benchmark::DoNotOptimize(grad);
  }
}
BENCHMARK(BM_NashdSubgradient)
    ->Args({3, 10})
    ->Args({5, 10})
    ->Unit(benchmark::kMicrosecond);

void BM_SolveNashdGd(benchmark::State& state) {
  const auto game = nashd::random_game(3, 10, 7);
  nashd::GdConfig config;
  config.max_iters = 100;
  for (auto _ : state) {
    auto trace = nashd::solve_nashd_gd(game, config);
    benchmark::DoNotOptimize(trace.final_epsilon);
  }
}
BENCHMARK(BM_SolveNashdGd)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
