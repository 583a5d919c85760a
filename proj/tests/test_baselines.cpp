#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "nashd/baselines.hpp"
#include "nashd/generators.hpp"
#include "nashd/rng.hpp"

using nashd::PlayTrace;

TEST_SUITE_BEGIN("baselines");

TEST_CASE("fictitious play approaches the matching-pennies equilibrium") {
  const auto trace =
      nashd::solve_fictitious_play(fixtures::matching_pennies(), 1000, 0);
  CHECK(trace.output_epsilon <= 0.05);
  for (const auto& sample : trace.samples) {
    CHECK(sample.epsilon >= 0.0);
  }
}

TEST_CASE("fictitious play locks onto the dominant dilemma action") {
  const auto trace =
      nashd::solve_fictitious_play(fixtures::prisoners_dilemma(), 100, 0);
  CHECK(trace.output_epsilon == 0.0);
  CHECK(trace.output.strategy(0)[1] == 1.0);
  CHECK(trace.output.strategy(1)[1] == 1.0);
}

TEST_CASE("fictitious play on a single-player game is pure argmax") {
  const auto trace =
      nashd::solve_fictitious_play(fixtures::single_player_argmax(), 10, 0);
  CHECK(trace.output.strategy(0)[0] == 0.0);
  CHECK(trace.output.strategy(0)[1] == 1.0);
  CHECK(trace.output_epsilon == 0.0);
}

TEST_CASE("fictitious play marginals stay on the simplex") {
  const auto trace =
      nashd::solve_fictitious_play(nashd::random_game(3, 4, 5), 200, 0, 1);
  REQUIRE(trace.samples.size() == 200);
  for (int i = 0; i < trace.output.num_players(); ++i) {
    double sum = 0.0;
    for (double p : trace.output.strategy(i)) {
      CHECK(p >= 0.0);
      sum += p;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-9);
  }
}

TEST_CASE("regret matching approaches the matching-pennies equilibrium") {
  const auto trace =
      nashd::solve_regret_matching(fixtures::matching_pennies(), 1000, 0);
  CHECK(trace.output_epsilon <= 0.05);
}

TEST_CASE("regret matching pushes the dilemma average toward all-defect") {
  const auto trace =
      nashd::solve_regret_matching(fixtures::prisoners_dilemma(), 1000, 0);
  for (int i = 0; i < 2; ++i) {
    const double tv = 0.5 * (std::abs(trace.output.strategy(i)[0] - 0.0) +
                             std::abs(trace.output.strategy(i)[1] - 1.0));
    CHECK(tv <= 0.05);
  }
}

TEST_CASE("regret matching dilemma trace improves from round 100 to 1000") {
  const auto trace = nashd::solve_regret_matching(fixtures::prisoners_dilemma(),
                                                  1000, 0, 100);
  REQUIRE(trace.samples.size() == 10);
  CHECK(trace.samples.front().round == 100);
  CHECK(trace.samples.back().round == 1000);
  CHECK(trace.samples.back().epsilon < trace.samples.front().epsilon);
}

TEST_CASE("regret matching plays uniform while no regret is positive") {
  const auto trace =
      nashd::solve_regret_matching(fixtures::constant_game(3, 4, 0.0), 50, 0);
  for (int i = 0; i < 3; ++i) {
    for (double p : trace.output.strategy(i)) {
      CHECK(p == doctest::Approx(0.25).epsilon(1e-14));
    }
  }
  CHECK(trace.output_epsilon == 0.0);
}

TEST_CASE("regret matching epsilon trends down on zero-sum games") {
  int improved = 0;
  const int trials = 100;
  for (int s = 0; s < trials; ++s) {
    // Constant-sum construction: u2 = 1 - u1 with u1 uniform in [0,1].
    nashd::Rng rng(4000 + static_cast<std::uint64_t>(s));
    std::vector<double> u1(36);
    for (double& v : u1) v = rng.uniform();
    std::vector<double> u2(36);
    for (std::size_t k = 0; k < u1.size(); ++k) u2[k] = 1.0 - u1[k];
    const nashd::NormalFormGame game({6, 6}, {u1, u2}, "zero-sum");

    const auto trace = nashd::solve_regret_matching(game, 1000, 0, 100);
    REQUIRE(trace.samples.size() == 10);
    if (trace.samples.back().epsilon <= trace.samples.front().epsilon) {
      ++improved;
    }
  }
  CHECK(improved >= trials * 9 / 10);
}

TEST_CASE("baseline traces are bit-identical across repeated runs") {
  const auto game = nashd::random_game(3, 3, 99);
  for (int alg = 0; alg < 2; ++alg) {
    const auto run = [&]() -> PlayTrace {
      return alg == 0 ? nashd::solve_fictitious_play(game, 300, 7, 10)
                      : nashd::solve_regret_matching(game, 300, 7, 10);
    };
    const auto a = run();
    const auto b = run();
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t t = 0; t < a.samples.size(); ++t) {
      CHECK(a.samples[t].epsilon == b.samples[t].epsilon);
      CHECK(a.samples[t].nashd == b.samples[t].nashd);
    }
    for (int i = 0; i < 3; ++i) {
      CHECK(a.output.strategy(i) == b.output.strategy(i));
    }
  }
}

TEST_SUITE_END();
