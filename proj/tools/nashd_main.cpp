// Command-line front end: generate or import games, run the solvers, and
// emit CSV traces and benchmark tables.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nashd/baselines.hpp"
#include "nashd/bench.hpp"
#include "nashd/format.hpp"
#include "nashd/game.hpp"
#include "nashd/generators.hpp"
#include "nashd/nfg.hpp"
#include "nashd/rng.hpp"
#include "nashd/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitCapacityError = 2;

struct GameInput {
  std::string game_file;
  std::string game_class;
  int players = 2;
  int actions = 2;
  std::uint64_t seed = 0;
};

void add_game_options(CLI::App* cmd, GameInput& input, bool file_allowed) {
  if (file_allowed) {
    cmd->add_option("--game", input.game_file, ".nfg file to load");
  }
  cmd->add_option("--class", input.game_class,
                  "game class: random, prisoners_dilemma_n, majority_voting, "
                  "congestion, coordination");
  cmd->add_option("--players", input.players, "number of players");
  cmd->add_option("--actions", input.actions, "actions per player");
  cmd->add_option("--seed", input.seed, "game generator seed");
}

nashd::NormalFormGame load_game(const GameInput& input) {
  if (!input.game_file.empty() && !input.game_class.empty()) {
    throw std::invalid_argument("pass either --game or --class, not both");
  }
  if (!input.game_file.empty()) {
    return nashd::read_nfg_file(input.game_file);
  }
  if (input.game_class.empty()) {
    throw std::invalid_argument("one of --game or --class is required");
  }
  nashd::GameSpec spec{nashd::parse_game_class(input.game_class), input.players,
                       input.actions, input.seed};
  return nashd::make_game(spec);
}

struct GdFlags {
  int iters = 1000;
  double lr = 0.5;
  double decay = 0.8;
  int decay_every = 100;
  std::uint64_t init_seed = 0;
  double early_stop = -1.0;
  std::string report = "final";
};

void add_gd_options(CLI::App* cmd, GdFlags& flags) {
  cmd->add_option("--iters", flags.iters, "gradient-descent iterations");
  cmd->add_option("--lr", flags.lr, "initial learning rate");
  cmd->add_option("--decay", flags.decay, "learning-rate decay factor");
  cmd->add_option("--decay-every", flags.decay_every,
                  "iterations between decay steps");
  cmd->add_option("--init-seed", flags.init_seed,
                  "seed for the logit initialization");
  cmd->add_option("--early-stop", flags.early_stop,
                  "stop once epsilon reaches this value (off by default)");
  cmd->add_option("--report", flags.report,
                  "which iterate to report: final or best")
      ->check(CLI::IsMember({"final", "best"}));
}

nashd::GdConfig to_config(const GdFlags& flags) {
  nashd::GdConfig config;
  config.max_iters = flags.iters;
  config.initial_lr = flags.lr;
  config.decay_factor = flags.decay;
  config.decay_every = flags.decay_every;
  config.seed = flags.init_seed;
  if (flags.early_stop >= 0.0) {
    config.early_stop_eps = flags.early_stop;
  }
  config.report = flags.report == "best"
                      ? nashd::GdConfig::Report::best_iterate
                      : nashd::GdConfig::Report::final_iterate;
  return config;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << text;
  if (!out) {
    throw std::runtime_error("failed writing " + path);
  }
}

// Expands "2,4..6" style grid values into a sorted unique list.
std::vector<int> parse_int_grid(const std::vector<std::string>& tokens) {
  std::vector<int> out;
  for (const std::string& group : tokens) {
    std::stringstream ss(group);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto dots = item.find("..");
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        const int lo = std::stoi(item.substr(0, dots));
        const int hi = std::stoi(item.substr(dots + 2));
        if (hi < lo) {
          throw std::invalid_argument("bad range: " + item);
        }
        for (int v = lo; v <= hi; ++v) {
          out.push_back(v);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) {
    throw std::invalid_argument("empty grid axis");
  }
  return out;
}

struct RunResult {
  double epsilon = 0.0;
  int iterations = 0;
  double wall_ms = 0.0;
};

void write_trace_csv(const std::string& path,
                     const std::vector<nashd::TraceRecord>& records) {
  std::ostringstream out;
  out << "iteration,nashd,epsilon\n";
  for (const auto& r : records) {
    out << r.iteration << ',' << nashd::format_double(r.nashd) << ','
        << nashd::format_double(r.epsilon) << '\n';
  }
  write_text_file(path, out.str());
}

void write_play_trace_csv(const std::string& path,
                          const std::vector<nashd::PlaySample>& samples) {
  std::ostringstream out;
  out << "iteration,nashd,epsilon\n";
  for (const auto& s : samples) {
    out << s.round << ',' << nashd::format_double(s.nashd) << ','
        << nashd::format_double(s.epsilon) << '\n';
  }
  write_text_file(path, out.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate Nash equilibria of N-player normal-form games"};
  app.require_subcommand(1);

  // --- solve ---------------------------------------------------------
  auto* solve = app.add_subcommand(
      "solve", "solve one game and print a one-line result");
  GameInput solve_input;
  GdFlags solve_gd;
  std::string solve_alg = "nashd_gd";
  int solve_rounds = 1000;
  std::string solve_profile;
  std::string solve_trace_csv;
  std::string solve_record_csv;
  add_game_options(solve, solve_input, true);
  add_gd_options(solve, solve_gd);
  solve->add_option("--alg", solve_alg, "nashd_gd, fp, rm, or external")
      ->check(CLI::IsMember({"nashd_gd", "fp", "rm", "external"}));
  solve->add_option("--rounds", solve_rounds, "fp/rm rounds");
  solve->add_option("--profile", solve_profile,
                    "strategy-profile file scored by --alg external");
  solve->add_option("--trace-csv", solve_trace_csv,
                    "write the per-iteration trace to this CSV");
  solve->add_option("--csv", solve_record_csv,
                    "write the result as a one-row records CSV");

  // --- generate ------------------------------------------------------
  auto* generate = app.add_subcommand("generate", "write a game as .nfg");
  GameInput generate_input;
  std::string generate_out;
  add_game_options(generate, generate_input, false);
  generate->add_option("-o,--output", generate_out, "output .nfg path")
      ->required();

  // --- trace ---------------------------------------------------------
  auto* trace = app.add_subcommand(
      "trace", "write the per-iteration (iteration,nashd,epsilon) CSV");
  GameInput trace_input;
  GdFlags trace_gd;
  std::string trace_alg = "nashd_gd";
  int trace_rounds = 1000;
  std::string trace_out;
  add_game_options(trace, trace_input, true);
  add_gd_options(trace, trace_gd);
  trace->add_option("--alg", trace_alg, "nashd_gd, fp, or rm")
      ->check(CLI::IsMember({"nashd_gd", "fp", "rm"}));
  trace->add_option("--rounds", trace_rounds, "fp/rm rounds");
  trace->add_option("-o,--output", trace_out, "output CSV path")->required();

  // --- bench ---------------------------------------------------------
  auto* bench = app.add_subcommand(
      "bench", "run the benchmark grid and write records + summary CSVs");
  std::vector<std::string> bench_classes{"random"};
  std::vector<std::string> bench_players{"2"};
  std::vector<std::string> bench_actions{"10"};
  std::vector<std::string> bench_algs{"nashd_gd", "fp", "rm"};
  int bench_seeds = 100;
  std::uint64_t bench_base_seed = 0;
  int bench_rounds = 1000;
  int bench_jobs = 1;
  GdFlags bench_gd;
  std::string bench_records_path = "bench_records.csv";
  std::string bench_summary_path;
  bench->add_option("--classes", bench_classes,
                    "game classes (comma-separated)");
  bench->add_option("--players", bench_players,
                    "players axis, e.g. 2,3 or 2..6");
  bench->add_option("--actions", bench_actions,
                    "actions axis, e.g. 2..10 or 10");
  bench->add_option("--seeds-per-cell", bench_seeds, "replicates per cell");
  bench->add_option("--algs", bench_algs, "algorithms (comma-separated)");
  bench->add_option("--base-seed", bench_base_seed,
                    "base seed for the per-cell seed derivation");
  bench->add_option("--rounds", bench_rounds, "fp/rm rounds");
  bench->add_option("--jobs", bench_jobs, "worker threads");
  add_gd_options(bench, bench_gd);
  bench->add_option("-o,--records", bench_records_path, "records CSV path");
  bench->add_option("--summary", bench_summary_path,
                    "summary CSV path (default: <records>_summary.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (solve->parsed()) {
      const nashd::NormalFormGame game = load_game(solve_input);
      RunResult result;
      if (solve_alg == "nashd_gd") {
        const auto trace_data = nashd::solve_nashd_gd(game, to_config(solve_gd));
        result = {trace_data.reported_epsilon(), trace_data.iterations_run,
                  trace_data.wall_ms};
        if (!solve_trace_csv.empty()) {
          write_trace_csv(solve_trace_csv, trace_data.records);
        }
      } else if (solve_alg == "fp" || solve_alg == "rm") {
        const int sample_every = solve_trace_csv.empty() ? solve_rounds : 1;
        const auto play = solve_alg == "fp"
                              ? nashd::solve_fictitious_play(
                                    game, solve_rounds, solve_input.seed,
                                    sample_every)
                              : nashd::solve_regret_matching(
                                    game, solve_rounds, solve_input.seed,
                                    sample_every);
        result = {play.output_epsilon, play.rounds_run, play.wall_ms};
        if (!solve_trace_csv.empty()) {
          write_play_trace_csv(solve_trace_csv, play.samples);
        }
      } else {  // external
        if (solve_profile.empty()) {
          throw std::invalid_argument("--alg external needs --profile");
        }
        const auto start = std::chrono::steady_clock::now();
        const nashd::NormalFormGame normalized = nashd::normalize(game);
        const auto profile = nashd::parse_profile_text(
            normalized, read_text_file(solve_profile));
        const double eps = nashd::epsilon(normalized, profile);
        const auto elapsed = std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start);
        result = {eps, 0, elapsed.count()};
      }

      const std::string label =
          !solve_input.game_file.empty() ? solve_input.game_file
                                         : solve_input.game_class;
      std::cout << "game=" << label << " algorithm=" << solve_alg
                << " epsilon=" << nashd::format_double(result.epsilon)
                << " iterations=" << result.iterations
                << " wall_ms=" << nashd::format_double(result.wall_ms) << '\n';

      if (!solve_record_csv.empty()) {
        nashd::BenchRecord record;
        record.game_class = label;
        record.n_players = game.num_players();
        record.n_actions = *std::max_element(game.action_counts().begin(),
                                             game.action_counts().end());
        record.game_size = static_cast<std::int64_t>(game.num_profiles());
        record.seed = solve_input.seed;
        record.algorithm = nashd::parse_algorithm(solve_alg);
        record.epsilon = result.epsilon;
        record.iterations = result.iterations;
        record.wall_ms = result.wall_ms;
        std::ostringstream out;
        nashd::write_records_csv(out, {record});
        write_text_file(solve_record_csv, out.str());
      }
      return kExitOk;
    }

    if (generate->parsed()) {
      const nashd::NormalFormGame game = load_game(generate_input);
      nashd::write_nfg_file(generate_out, game);
      return kExitOk;
    }

    if (trace->parsed()) {
      const nashd::NormalFormGame game = load_game(trace_input);
      if (trace_alg == "nashd_gd") {
        const auto trace_data = nashd::solve_nashd_gd(game, to_config(trace_gd));
        write_trace_csv(trace_out, trace_data.records);
      } else {
        const auto play =
            trace_alg == "fp"
                ? nashd::solve_fictitious_play(game, trace_rounds,
                                               trace_input.seed, 1)
                : nashd::solve_regret_matching(game, trace_rounds,
                                               trace_input.seed, 1);
        write_play_trace_csv(trace_out, play.samples);
      }
      return kExitOk;
    }

    if (bench->parsed()) {
      nashd::BenchConfig config;
      config.classes.clear();
      for (const auto& group : bench_classes) {
        std::stringstream ss(group);
        std::string item;
        while (std::getline(ss, item, ',')) {
          if (!item.empty()) {
            config.classes.push_back(nashd::parse_game_class(item));
          }
        }
      }
      config.players = parse_int_grid(bench_players);
      config.actions = parse_int_grid(bench_actions);
      config.seeds_per_cell = bench_seeds;
      config.algorithms.clear();
      for (const auto& group : bench_algs) {
        std::stringstream ss(group);
        std::string item;
        while (std::getline(ss, item, ',')) {
          if (!item.empty()) {
            config.algorithms.push_back(nashd::parse_algorithm(item));
          }
        }
      }
      config.base_seed = bench_base_seed;
      config.gd = to_config(bench_gd);
      config.rounds = bench_rounds;
      config.jobs = bench_jobs;

      const auto records = nashd::run_bench(config);
      const auto summary = nashd::summarize(records);

      std::ostringstream records_out;
      nashd::write_records_csv(records_out, records);
      write_text_file(bench_records_path, records_out.str());

      std::string summary_path = bench_summary_path;
      if (summary_path.empty()) {
        const auto dot = bench_records_path.rfind(".csv");
        summary_path = dot == std::string::npos
                           ? bench_records_path + "_summary.csv"
                           : bench_records_path.substr(0, dot) +
                                 "_summary.csv";
      }
      std::ostringstream summary_out;
      nashd::write_summary_csv(summary_out, summary);
      write_text_file(summary_path, summary_out.str());

      std::cout << "records=" << bench_records_path
                << " summary=" << summary_path << " rows=" << records.size()
                << '\n';
      return kExitOk;
    }
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacityError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
