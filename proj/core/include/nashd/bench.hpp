#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nashd/baselines.hpp"
#include "nashd/game.hpp"
#include "nashd/generators.hpp"
#include "nashd/solver.hpp"

namespace nashd {

enum class Algorithm { nashd_gd, fp, rm, external };

// Accepted names: nashd_gd, fp, rm, external. Throws std::invalid_argument
// otherwise.
Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm algorithm);

// One benchmark row. Records produced by run_bench carry wall_ms = 0 so
// that record CSVs are byte-identical across runs (timing is measured by
// the solve and trace commands, whose output is not replayed).
struct BenchRecord {
  std::string game_class;
  int n_players = 0;
  int n_actions = 0;  // max action count over players
  std::int64_t game_size = 0;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::nashd_gd;
  double epsilon = 0.0;
  int iterations = 0;
  double wall_ms = 0.0;
};

// Aggregate over records sharing (game_class, game_size, algorithm).
struct SummaryRow {
  std::string game_class;
  std::int64_t game_size = 0;
  Algorithm algorithm = Algorithm::nashd_gd;
  double mean_epsilon = 0.0;
  double ci95_halfwidth = 0.0;  // 1.96 * sd / sqrt(count); 0 for count == 1
  int count = 0;
};

struct BenchConfig {
  std::vector<GameClass> classes{GameClass::random};
  std::vector<int> players{2};
  std::vector<int> actions{10};
  int seeds_per_cell = 100;
  std::vector<Algorithm> algorithms{Algorithm::nashd_gd, Algorithm::fp,
                                    Algorithm::rm};
  std::uint64_t base_seed = 0;
  GdConfig gd{};      // benchmark schedule by default
  int rounds = 1000;  // fictitious play / regret matching rounds
  int jobs = 1;       // worker threads; output is canonical regardless
};

// Stable seed for one benchmark cell replicate: FNV-1a (64-bit) over the
// little-endian base seed, the class name bytes, a 0 separator, and the
// little-endian players, actions, and replicate values. Re-running one
// cell never perturbs any other. The same value seeds the game; the
// solver's logit initialization uses mix64 of it.
std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view game_class,
                          int players, int actions, int replicate);

// Runs every (cell, replicate, algorithm) combination and returns the
// records sorted by (game_class, n_players, n_actions, algorithm, seed).
// Games and solver runs are deterministic per derived seed, so the result
// is a pure function of the config. Algorithm::external is rejected
// (profiles to score come through the solve command).
std::vector<BenchRecord> run_bench(const BenchConfig& config);

std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records);

// Fixed CSV schemas (v1):
//   records: game_class,n_players,n_actions,game_size,seed,algorithm,
//            epsilon,iterations,wall_ms
//   summary: game_class,game_size,algorithm,mean_epsilon,ci95_halfwidth,count
void write_records_csv(std::ostream& out,
                       const std::vector<BenchRecord>& records);
void write_summary_csv(std::ostream& out,
                       const std::vector<SummaryRow>& rows);

// Parses a strategy profile from whitespace-separated probabilities, one
// block per player in player order (|A_1| values, then |A_2|, ...). Used
// to score externally produced profiles. Throws std::invalid_argument on
// count mismatch or malformed numbers.
StrategyProfile parse_profile_text(const NormalFormGame& game,
                                   std::string_view text);

}  // namespace nashd
