#include "nashd/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <mutex>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "nashd/format.hpp"
#include "nashd/rng.hpp"

namespace nashd {

namespace {

struct Cell {
  GameClass game_class;
  int players;
  int actions;
};

struct Task {
  Cell cell;
  int replicate;
};

BenchRecord run_one(const Cell& cell, int replicate, Algorithm algorithm,
                    const BenchConfig& config) {
  const std::string class_name = to_string(cell.game_class);
  const std::uint64_t seed = derive_seed(config.base_seed, class_name,
                                         cell.players, cell.actions, replicate);
  GameSpec spec{cell.game_class, cell.players, cell.actions, seed};
  const NormalFormGame game = make_game(spec);

  BenchRecord record;
  record.game_class = class_name;
  record.n_players = game.num_players();
  record.n_actions = *std::max_element(game.action_counts().begin(),
                                       game.action_counts().end());
  record.game_size = static_cast<std::int64_t>(game.num_profiles());
  record.seed = seed;
  record.algorithm = algorithm;
  record.wall_ms = 0.0;

  switch (algorithm) {
    case Algorithm::nashd_gd: {
      GdConfig gd = config.gd;
      gd.seed = mix64(seed);
      const SolveTrace trace = solve_nashd_gd(game, gd);
      record.epsilon = trace.reported_epsilon();
      record.iterations = trace.iterations_run;
      break;
    }
    case Algorithm::fp: {
      const PlayTrace trace =
          solve_fictitious_play(game, config.rounds, seed, config.rounds);
      record.epsilon = trace.output_epsilon;
      record.iterations = trace.rounds_run;
      break;
    }
    case Algorithm::rm: {
      const PlayTrace trace =
          solve_regret_matching(game, config.rounds, seed, config.rounds);
      record.epsilon = trace.output_epsilon;
      record.iterations = trace.rounds_run;
      break;
    }
    case Algorithm::external:
      throw std::invalid_argument(
          "external profiles are scored through the solve command, not the "
          "benchmark grid");
  }
  return record;
}

bool record_less(const BenchRecord& a, const BenchRecord& b) {
  return std::tie(a.game_class, a.n_players, a.n_actions, a.algorithm,
                  a.seed) < std::tie(b.game_class, b.n_players, b.n_actions,
                                     b.algorithm, b.seed);
}

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
  if (name == "nashd_gd") return Algorithm::nashd_gd;
  if (name == "fp") return Algorithm::fp;
  if (name == "rm") return Algorithm::rm;
  if (name == "external") return Algorithm::external;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::nashd_gd: return "nashd_gd";
    case Algorithm::fp: return "fp";
    case Algorithm::rm: return "rm";
    case Algorithm::external: return "external";
  }
  throw std::invalid_argument("unknown algorithm value");
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view game_class,
                          int players, int actions, int replicate) {
  constexpr std::uint64_t kOffset = 0xcbf29ce484222325ull;
  constexpr std::uint64_t kPrime = 0x100000001b3ull;
  std::uint64_t h = kOffset;
  const auto mix_byte = [&](unsigned char byte) {
    h ^= byte;
    h *= kPrime;
  };
  const auto mix_u64 = [&](std::uint64_t v) {
    for (int shift = 0; shift < 64; shift += 8) {
      mix_byte(static_cast<unsigned char>(v >> shift));
    }
  };
  mix_u64(base_seed);
  for (char c : game_class) {
    mix_byte(static_cast<unsigned char>(c));
  }
  mix_byte(0);
  mix_u64(static_cast<std::uint64_t>(players));
  mix_u64(static_cast<std::uint64_t>(actions));
  mix_u64(static_cast<std::uint64_t>(replicate));
  return h;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.seeds_per_cell < 1) {
    throw std::invalid_argument("seeds_per_cell must be at least 1");
  }
  if (config.jobs < 1) {
    throw std::invalid_argument("jobs must be at least 1");
  }
  for (Algorithm a : config.algorithms) {
    if (a == Algorithm::external) {
      throw std::invalid_argument(
          "external profiles are scored through the solve command, not the "
          "benchmark grid");
    }
  }

  // Build the cell list; prisoners_dilemma_n always has 2 actions, so the
  // actions axis collapses for it.
  std::vector<Cell> cells;
  std::set<std::tuple<GameClass, int, int>> seen;
  for (GameClass cls : config.classes) {
    for (int players : config.players) {
      for (int actions : config.actions) {
        const int effective =
            cls == GameClass::prisoners_dilemma_n ? 2 : actions;
        if (seen.insert({cls, players, effective}).second) {
          cells.push_back({cls, players, effective});
        }
      }
    }
  }

  std::vector<Task> tasks;
  tasks.reserve(cells.size() * static_cast<std::size_t>(config.seeds_per_cell));
  for (const Cell& cell : cells) {
    for (int r = 0; r < config.seeds_per_cell; ++r) {
      tasks.push_back({cell, r});
    }
  }

  const std::size_t algorithms = config.algorithms.size();
  std::vector<BenchRecord> records(tasks.size() * algorithms);
  const auto run_task = [&](std::size_t task_index) {
    const Task& task = tasks[task_index];
    for (std::size_t a = 0; a < algorithms; ++a) {
      records[task_index * algorithms + a] =
          run_one(task.cell, task.replicate, config.algorithms[a], config);
    }
  };

  if (config.jobs == 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      run_task(i);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const int workers =
        std::min<int>(config.jobs, static_cast<int>(tasks.size()));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) break;
          try {
            run_task(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            break;
          }
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
  }

  std::sort(records.begin(), records.end(), record_less);
  return records;
}

std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records) {
  std::vector<SummaryRow> rows;
  std::vector<std::vector<double>> groups;
  const auto key = [](const BenchRecord& r) {
    return std::tuple<const std::string&, std::int64_t, Algorithm>(
        r.game_class, r.game_size, r.algorithm);
  };
  std::vector<BenchRecord> sorted = records;
  std::sort(sorted.begin(), sorted.end(),
            [&](const BenchRecord& a, const BenchRecord& b) {
              return key(a) < key(b);
            });
  for (const BenchRecord& r : sorted) {
    if (rows.empty() || key(r) != std::tuple<const std::string&, std::int64_t,
                                             Algorithm>(rows.back().game_class,
                                                        rows.back().game_size,
                                                        rows.back().algorithm)) {
      rows.push_back({r.game_class, r.game_size, r.algorithm, 0.0, 0.0, 0});
      groups.emplace_back();
    }
    groups.back().push_back(r.epsilon);
  }
  for (std::size_t g = 0; g < rows.size(); ++g) {
    const auto& eps = groups[g];
    const int n = static_cast<int>(eps.size());
    double mean = 0.0;
    for (double e : eps) mean += e;
    mean /= n;
    double halfwidth = 0.0;
    if (n > 1) {
      double ss = 0.0;
      for (double e : eps) ss += (e - mean) * (e - mean);
      const double sd = std::sqrt(ss / (n - 1));
      halfwidth = 1.96 * sd / std::sqrt(static_cast<double>(n));
    }
    rows[g].mean_epsilon = mean;
    rows[g].ci95_halfwidth = halfwidth;
    rows[g].count = n;
  }
  return rows;
}

void write_records_csv(std::ostream& out,
                       const std::vector<BenchRecord>& records) {
  out << "game_class,n_players,n_actions,game_size,seed,algorithm,epsilon,"
         "iterations,wall_ms\n";
  for (const BenchRecord& r : records) {
    out << r.game_class << ',' << r.n_players << ',' << r.n_actions << ','
        << r.game_size << ',' << r.seed << ',' << to_string(r.algorithm) << ','
        << format_double(r.epsilon) << ',' << r.iterations << ','
        << format_double(r.wall_ms) << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "game_class,game_size,algorithm,mean_epsilon,ci95_halfwidth,count\n";
  for (const SummaryRow& r : rows) {
    out << r.game_class << ',' << r.game_size << ',' << to_string(r.algorithm)
        << ',' << format_double(r.mean_epsilon) << ','
        << format_double(r.ci95_halfwidth) << ',' << r.count << '\n';
  }
}

StrategyProfile parse_profile_text(const NormalFormGame& game,
                                   std::string_view text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    double v = 0.0;
    const auto res = std::from_chars(text.data() + pos, text.data() + end, v);
    if (res.ec != std::errc{} || res.ptr != text.data() + end) {
      throw std::invalid_argument(
          "expected a probability, got '" +
          std::string(text.substr(pos, end - pos)) + "'");
    }
    values.push_back(v);
    pos = end;
  }
  std::size_t expected = 0;
  for (int m : game.action_counts()) {
    expected += static_cast<std::size_t>(m);
  }
  if (values.size() != expected) {
    throw std::invalid_argument("profile has " +
                                std::to_string(values.size()) +
                                " probabilities, expected " +
                                std::to_string(expected));
  }
  std::vector<std::vector<double>> strategies;
  strategies.reserve(static_cast<std::size_t>(game.num_players()));
  std::size_t cursor = 0;
  for (int m : game.action_counts()) {
    strategies.emplace_back(values.begin() + static_cast<std::ptrdiff_t>(cursor),
                            values.begin() +
                                static_cast<std::ptrdiff_t>(cursor + m));
    cursor += static_cast<std::size_t>(m);
  }
  return StrategyProfile(std::move(strategies));
}

}  // namespace nashd
