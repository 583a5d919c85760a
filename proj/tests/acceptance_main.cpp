// Acceptance suite: one pass/fail line per criterion, exit code equal to
// the number of failed criteria. Criterion 9 exercises the command-line
// tool and needs its path as argv[1]; everything else runs in-process.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "nashd/baselines.hpp"
#include "nashd/bench.hpp"
#include "nashd/game.hpp"
#include "nashd/generators.hpp"
#include "nashd/nfg.hpp"
#include "nashd/rng.hpp"
#include "nashd/solver.hpp"
#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

// --- criterion 1: analytic subgradient vs central finite differences ----
Outcome gradient_correctness() {
  double worst = 0.0;
  int points = 0;
  for (int g = 0; g < 20; ++g) {
    const auto game = nashd::normalize(nashd::random_game(3, 4, 9000 + g));
    nashd::Rng rng(100 + static_cast<std::uint64_t>(g));
    int accepted = 0;
    int attempts = 0;
    while (accepted < 50 && attempts < 500) {
      ++attempts;
      const auto z = oracles::random_logits(game, rng);
      if (oracles::min_argmax_margin(game, nashd::softmax_profile(z)) <= 1e-3) {
        continue;
      }
      ++accepted;
      ++points;
      const auto analytic = nashd::nashd_subgradient(game, z);
      const auto fd = oracles::finite_difference_gradient(game, z, 1e-5);
      worst = std::max(worst, oracles::relative_gradient_error(analytic, fd));
    }
    if (accepted < 50) {
      return {false, "could not sample 50 well-margined points for game " +
                         std::to_string(g)};
    }
  }
  return {worst < 1e-5, "worst_rel_err=" + num(worst) + " over " +
                            std::to_string(points) + " points (limit 1e-5)"};
}

// --- criterion 2: NashD identity and regret-sum bounds ------------------
Outcome nashd_identity() {
  nashd::Rng shape_rng(4242);
  double worst_gap = 0.0;
  double most_negative = 0.0;
  for (int g = 0; g < 100; ++g) {
    const int players = 2 + static_cast<int>(shape_rng.uniform() * 3.0);
    const int actions = 2 + static_cast<int>(shape_rng.uniform() * 4.0);
    const auto game = nashd::random_game(players, actions,
                                         11000 + static_cast<std::uint64_t>(g));
    const auto extended = nashd::zero_sum_extend(game);
    nashd::Rng rng(500 + static_cast<std::uint64_t>(g));
    for (int p = 0; p < 10; ++p) {
      const auto sigma = oracles::random_profile(game, rng);

      double regret_sum = 0.0;  // unclamped
      for (int i = 0; i < players; ++i) {
        const auto dev = nashd::deviation_payoffs(game, i, sigma);
        double best = dev[0];
        double value = 0.0;
        for (std::size_t k = 0; k < dev.size(); ++k) {
          best = std::max(best, dev[k]);
          value += sigma.strategy(i)[k] * dev[k];
        }
        regret_sum += best - value;
      }

      auto strategies = sigma.strategies();
      strategies.push_back({1.0});
      const nashd::StrategyProfile sigma_ext(strategies);
      double literal = 0.0;
      for (int i = 0; i < extended.num_players(); ++i) {
        const auto dev = nashd::deviation_payoffs(extended, i, sigma_ext);
        double best = dev[0];
        for (double v : dev) best = std::max(best, v);
        literal += best;
      }

      worst_gap = std::max(worst_gap, std::abs(regret_sum - literal));
      most_negative = std::min(most_negative, regret_sum);

      const double nd = nashd::nashd(game, sigma);
      const double eps = nashd::epsilon(game, sigma);
      if (eps > nd + 1e-12 || nd > players * eps + 1e-9) {
        return {false, "regret-sum bounds violated: eps=" + num(eps) +
                           " nashd=" + num(nd) + " players=" +
                           std::to_string(players)};
      }
    }
  }
  const bool pass = worst_gap < 1e-10 && most_negative >= -1e-12;
  return {pass, "identity_gap=" + num(worst_gap) +
                    " (limit 1e-10), min_regret_sum=" + num(most_negative) +
                    ", bounds eps<=NashD<=N*eps held on 1000 profiles"};
}

// --- criterion 3: known equilibria under the benchmark schedule ---------
Outcome known_equilibria() {
  std::string detail;
  bool pass = true;
  const auto run = [&](const std::string& label,
                       const nashd::NormalFormGame& game) {
    const auto trace = nashd::solve_nashd_gd(game, nashd::GdConfig{});
    detail += label + "=" + num(trace.final_epsilon) + " ";
    if (trace.final_epsilon > 0.01) pass = false;
  };
  run("mp", fixtures::matching_pennies());
  run("pd2", nashd::prisoners_dilemma_n(2));
  run("pd3", nashd::prisoners_dilemma_n(3));
  run("pd5", nashd::prisoners_dilemma_n(5));
  run("single", fixtures::single_player_argmax());
  return {pass, detail + "(limit 0.01 each)"};
}

// --- criterion 4: baseline sanity ---------------------------------------
Outcome baseline_sanity() {
  std::string detail;
  bool pass = true;
  const auto mp = fixtures::matching_pennies();
  const double fp_mp = nashd::solve_fictitious_play(mp, 1000, 0).output_epsilon;
  const double rm_mp = nashd::solve_regret_matching(mp, 1000, 0).output_epsilon;
  detail += "fp_mp=" + num(fp_mp) + " rm_mp=" + num(rm_mp) + " (limit 0.05);";
  if (fp_mp > 0.05 || rm_mp > 0.05) pass = false;
  for (int n : {2, 3, 5}) {
    const auto pd = nashd::prisoners_dilemma_n(n);
    const double fp_pd =
        nashd::solve_fictitious_play(pd, 1000, 0).output_epsilon;
    const double rm_pd =
        nashd::solve_regret_matching(pd, 1000, 0).output_epsilon;
    detail += " pd" + std::to_string(n) + ": fp=" + num(fp_pd) +
              " rm=" + num(rm_pd) + ";";
    if (fp_pd > 0.01 || rm_pd > 0.01) pass = false;
  }
  return {pass, detail + " (pd limit 0.01)"};
}

// --- criterion 5: comparative trend vs regret matching ------------------
Outcome comparative_trend() {
  nashd::BenchConfig config;
  config.classes = {nashd::GameClass::random};
  config.players = {2, 3};
  config.actions = {10};
  config.seeds_per_cell = 100;
  config.algorithms = {nashd::Algorithm::nashd_gd, nashd::Algorithm::rm};
  config.jobs = 2;
  const auto records = nashd::run_bench(config);

  std::map<std::pair<int, nashd::Algorithm>, std::pair<double, int>> cells;
  for (const auto& r : records) {
    auto& cell = cells[{r.n_players, r.algorithm}];
    cell.first += r.epsilon;
    cell.second += 1;
  }
  const auto mean = [&](int players, nashd::Algorithm alg) {
    const auto& cell = cells.at({players, alg});
    return cell.first / cell.second;
  };
  const double gd2 = mean(2, nashd::Algorithm::nashd_gd);
  const double rm2 = mean(2, nashd::Algorithm::rm);
  const double gd3 = mean(3, nashd::Algorithm::nashd_gd);
  const double rm3 = mean(3, nashd::Algorithm::rm);

  const bool pass = gd2 <= rm2 && gd3 <= rm3 && gd2 <= 0.08 && gd3 <= 0.08;
  std::string detail = "2x10: nashd_gd=" + num(gd2) + " rm=" + num(rm2) +
                       (gd2 <= rm2 ? " ok" : " VIOLATED") +
                       "; 3x10: nashd_gd=" + num(gd3) + " rm=" + num(rm3) +
                       (gd3 <= rm3 ? " ok" : " VIOLATED") +
                       "; caps(0.08): " +
                       (gd2 <= 0.08 && gd3 <= 0.08 ? "ok" : "VIOLATED") +
                       "; pooled: nashd_gd=" + num(0.5 * (gd2 + gd3)) +
                       " rm=" + num(0.5 * (rm2 + rm3));
  return {pass, detail};
}

// --- criterion 6: robustness grid ----------------------------------------
Outcome robustness_grid() {
  nashd::BenchConfig config;
  config.classes = {nashd::GameClass::random};
  config.players = {3, 4, 5};
  config.actions = {2, 3, 4, 5, 6, 7, 8, 9, 10};
  config.seeds_per_cell = 20;
  config.algorithms = {nashd::Algorithm::nashd_gd};
  config.jobs = 2;
  const auto records = nashd::run_bench(config);

  std::map<std::pair<int, int>, std::pair<double, int>> cells;
  for (const auto& r : records) {
    auto& cell = cells[{r.n_players, r.n_actions}];
    cell.first += r.epsilon;
    cell.second += 1;
  }
  double worst = 0.0;
  std::pair<int, int> worst_cell{0, 0};
  for (const auto& [key, cell] : cells) {
    const double mean = cell.first / cell.second;
    if (mean > worst) {
      worst = mean;
      worst_cell = key;
    }
  }
  const bool pass = worst <= 0.1 && cells.size() == 27;
  return {pass, "27 cells (players 3-5 x actions 2-10, 20 seeds); worst mean=" +
                    num(worst) + " at " + std::to_string(worst_cell.first) +
                    "x" + std::to_string(worst_cell.second) + " (limit 0.1)"};
}

// --- criterion 7: descent tendency ---------------------------------------
Outcome descent_tendency() {
  int descended = 0;
  for (int s = 0; s < 100; ++s) {
    nashd::GdConfig config;
    config.seed = nashd::mix64(static_cast<std::uint64_t>(s));
    const auto trace = nashd::solve_nashd_gd(
        nashd::random_game(2, 10, 13000 + static_cast<std::uint64_t>(s)),
        config);
    if (trace.final_nashd <= trace.records.front().nashd) ++descended;
  }
  return {descended >= 95,
          std::to_string(descended) + "/100 runs ended at or below their "
                                      "initial NashD (need 95)"};
}

// --- criterion 8: .nfg round trip and mutation ---------------------------
Outcome nfg_round_trip() {
  std::vector<nashd::NormalFormGame> games;
  for (int k = 0; k < 10; ++k) {
    games.push_back(nashd::random_game(2 + k % 3, 2 + k % 4,
                                       14000 + static_cast<std::uint64_t>(k)));
    games.push_back(nashd::prisoners_dilemma_n(2 + k));
    games.push_back(nashd::majority_voting(3 + k % 3, 2 + k % 3,
                                           14100 + static_cast<std::uint64_t>(k)));
    games.push_back(nashd::congestion_game(2 + k % 4, 2 + k % 3,
                                           14200 + static_cast<std::uint64_t>(k)));
    games.push_back(nashd::coordination_game(2 + k % 4, 2 + k % 4));
  }
  for (std::size_t g = 0; g < games.size(); ++g) {
    const auto back = nashd::parse_nfg(nashd::serialize_nfg(games[g]));
    if (back.action_counts() != games[g].action_counts()) {
      return {false, "action counts changed in round trip " + std::to_string(g)};
    }
    for (int i = 0; i < games[g].num_players(); ++i) {
      if (back.payoffs(i) != games[g].payoffs(i)) {
        return {false, "payoffs not bit-equal in round trip " +
                           std::to_string(g)};
      }
    }
  }

  // Deleting any one payoff token must be an arity error.
  const auto sample = nashd::random_game(2, 2, 14999);
  const std::string text = nashd::serialize_nfg(sample);
  const auto payoff_start = text.find("}\n\n") + 3;
  const std::string header = text.substr(0, payoff_start);
  std::istringstream body(text.substr(payoff_start));
  std::vector<std::string> tokens;
  std::string token;
  while (body >> token) tokens.push_back(token);
  int mutations = 0;
  for (std::size_t drop = 0; drop < tokens.size(); ++drop) {
    std::string mutated = header;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      if (k == drop) continue;
      mutated += tokens[k];
      mutated += ' ';
    }
    try {
      nashd::parse_nfg(mutated);
      return {false, "mutation " + std::to_string(drop) +
                         " parsed instead of failing"};
    } catch (const nashd::NfgError& e) {
      if (e.kind() != nashd::NfgError::Kind::arity) {
        return {false, "mutation " + std::to_string(drop) +
                           " raised the wrong error kind"};
      }
      ++mutations;
    }
  }
  return {true, "50 games round-tripped bit-exactly; " +
                    std::to_string(mutations) + "/" +
                    std::to_string(tokens.size()) +
                    " single-token deletions raised arity errors"};
}

// --- criterion 9: CLI determinism ----------------------------------------
int run_command(const std::string& command) {
  const int status = std::system(command.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Outcome cli_determinism(const std::string& tool) {
  if (tool.empty()) {
    return {false, "no tool path given (pass the nashd binary as argv[1])"};
  }
  const fs::path dir =
      fs::temp_directory_path() /
      ("nashd_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string flags =
      " bench --classes random,coordination --players 2,3 --actions 3"
      " --seeds-per-cell 5 --algs nashd_gd,fp,rm --iters 50 --rounds 50"
      " --base-seed 3 --jobs 2";
  const auto r1 = dir / "records1.csv";
  const auto r2 = dir / "records2.csv";
  const auto s1 = dir / "summary1.csv";
  const auto s2 = dir / "summary2.csv";
  const int code1 =
      run_command("'" + tool + "'" + flags + " -o '" + r1.string() +
                  "' --summary '" + s1.string() + "' > /dev/null");
  const int code2 =
      run_command("'" + tool + "'" + flags + " -o '" + r2.string() +
                  "' --summary '" + s2.string() + "' > /dev/null");
  if (code1 != 0 || code2 != 0) {
    return {false, "bench exited with codes " + std::to_string(code1) + "/" +
                       std::to_string(code2)};
  }
  const std::string a = slurp(r1);
  const std::string b = slurp(r2);
  const bool records_equal = !a.empty() && a == b;
  const bool summary_equal = slurp(s1) == slurp(s2);
  fs::remove_all(dir);
  if (!records_equal) return {false, "record CSVs differ between runs"};
  if (!summary_equal) return {false, "summary CSVs differ between runs"};
  std::ostringstream count;
  count << std::count(a.begin(), a.end(), '\n') - 1;
  return {true, "two bench runs produced byte-identical record and summary "
                "CSVs (" +
                    count.str() + " rows)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string tool = argc > 1 ? argv[1] : "";
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    double time_limit_s;  // 0 = no stated limit
  };
  const std::vector<Criterion> criteria{
      {"gradient correctness", gradient_correctness, 60.0},
      {"nashd identity + regret bounds", nashd_identity, 0.0},
      {"known equilibria", known_equilibria, 10.0},
      {"baseline sanity", baseline_sanity, 0.0},
      {"comparative trend vs rm", comparative_trend, 900.0},
      {"robustness grid", robustness_grid, 1200.0},
      {"descent tendency", descent_tendency, 0.0},
      {"nfg round trip + mutations", nfg_round_trip, 0.0},
      {"cli determinism", [&] { return cli_determinism(tool); }, 0.0},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[k].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (criteria[k].time_limit_s > 0.0 && seconds > criteria[k].time_limit_s) {
      outcome.pass = false;
      outcome.detail += " [exceeded " + num(criteria[k].time_limit_s) +
                        " s time limit]";
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion "
              << (k + 1) << " (" << criteria[k].name
              << "): " << outcome.detail << " [" << num(seconds) << " s]\n";
    std::cout.flush();
  }
  std::cout << (failures == 0 ? "ACCEPTANCE PASSED"
                              : "ACCEPTANCE FAILED (" +
                                    std::to_string(failures) + " criteria)")
            << '\n';
  return failures;
}
