// Benchmark harness: runs the chain enumerator and the MARCO-style baseline
// over a batch of instances (generated or loaded from a directory), emits one
// CSV row per (instance, algorithm), and cross-checks that both algorithms
// agree on the final result sets. Exit codes: 0 all runs completed and agreed,
// 1 some run was truncated or disagreed, 2 flag/input errors.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_common.hpp"
#include "enumerator.hpp"
#include "marco.hpp"

using namespace musen;

namespace {

struct Instance {
  std::string name;
  ConstraintSet set;
  uint64_t run_seed = 0;
};

bool parse_sizes(const std::string& text, int& lo, int& hi) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo > 0 && hi >= lo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chain-vs-MARCO benchmark over generated or on-disk instances"};

  std::string sizes = "30..40";
  std::string dir;
  std::string stats_path;
  std::string strategy = "pivot";
  int per_size = 15;
  int n_vars = 12;
  int width = 3;
  uint64_t seed = 7;
  double shrink_factor = 0.2;
  double grow_factor = 0.8;
  double pivot_fix_prob = 0.5;
  double timeout_s = 60.0;

  app.add_option("--sizes", sizes, "constraint counts to generate, e.g. 30..40")
      ->capture_default_str();
  app.add_option("--per-size", per_size, "instances per size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", seed, "master seed for generation and runs")
      ->capture_default_str();
  app.add_option("--vars", n_vars, "variables per generated instance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--width", width, "max clause width of generated instances")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--dir", dir, "run every .cnf in this directory instead");
  app.add_option("--strategy", strategy, "chain couple search: basic | pivot")
      ->check(CLI::IsMember({"basic", "pivot"}))
      ->capture_default_str();
  app.add_option("--shrink-factor", shrink_factor, "chain shrink gate slope")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--grow-factor", grow_factor, "chain grow gate slope")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--pivot-fix-prob", pivot_fix_prob,
                 "probability a pivot freezes each variable")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--timeout", timeout_s, "per-run time budget in seconds; 0 = none")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--stats", stats_path, "write the CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::vector<Instance> instances;
  std::mt19937_64 master(seed);
  if (!dir.empty()) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) {
      std::cerr << "error: '" << dir << "' is not a directory\n";
      return 2;
    }
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.path().extension() == ".cnf") paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
      std::ifstream in(p);
      if (!in) {
        std::cerr << "error: cannot read '" << p.string() << "'\n";
        return 2;
      }
      try {
        instances.push_back({p.filename().string(), parse_dimacs(in).set, master()});
      } catch (const ParseError& e) {
        std::cerr << "error: " << p.string() << ": " << e.what() << '\n';
        return 2;
      }
    }
  } else {
    int size_lo = 0, size_hi = 0;
    if (!parse_sizes(sizes, size_lo, size_hi)) {
      std::cerr << "error: bad --sizes value '" << sizes << "'\n";
      return 2;
    }
    if (width > n_vars) {
      std::cerr << "error: --width must not exceed --vars\n";
      return 2;
    }
    for (int size = size_lo; size <= size_hi; ++size) {
      for (int i = 0; i < per_size; ++i) {
        const uint64_t gen_seed = master();
        const uint64_t run_seed = master();
        std::string name = "gen-s" + std::to_string(size) + "-i" +
                           (i < 10 ? "0" : "") + std::to_string(i);
        instances.push_back({std::move(name),
                             random_cnf(n_vars, size, width, gen_seed), run_seed});
      }
    }
  }

  std::ofstream stats_file;
  if (!stats_path.empty()) {
    stats_file.open(stats_path);
    if (!stats_file) {
      std::cerr << "error: cannot open stats file '" << stats_path << "'\n";
      return 2;
    }
  }
  std::ostream& csv = stats_path.empty() ? std::cout : stats_file;
  csv << cli::kStatsHeader << '\n';

  RunConfig chain_cfg;
  chain_cfg.strategy = strategy == "pivot" ? Strategy::pivot : Strategy::basic;
  chain_cfg.gates.shrink_factor = shrink_factor;
  chain_cfg.gates.grow_factor = grow_factor;
  chain_cfg.pivot_fix_probability = pivot_fix_prob;
  const auto budget = std::chrono::milliseconds(
      static_cast<long long>(std::llround(timeout_s * 1000.0)));
  chain_cfg.time_budget = budget;
  RunConfig marco_cfg;
  marco_cfg.time_budget = budget;

  bool all_completed = true;
  bool all_agreed = true;
  for (const Instance& inst : instances) {
    chain_cfg.rng_seed = inst.run_seed;
    marco_cfg.rng_seed = inst.run_seed;
    const RunReport chain_report = enumerate(inst.set, chain_cfg);
    const RunReport marco_report = marco_enumerate(inst.set, marco_cfg);

    cli::StatsRow row;
    row.instance = inst.name;
    row.algorithm = "chain";
    row.strategy = strategy;
    row.shrink_factor = cli::format_double(shrink_factor);
    row.grow_factor = cli::format_double(grow_factor);
    row.seed = inst.run_seed;
    row.wall_ms = chain_report.wall_ms;
    row.checks = chain_report.constraint_checks;
    row.map_solves = chain_report.map_solves;
    row.n_mus = chain_report.final_mus.size();
    row.n_mss = chain_report.final_mss.size();
    row.completed = chain_report.completed;
    csv << cli::format_stats_row(row) << '\n' << std::flush;

    row.algorithm = "marco";
    row.strategy = "-";
    row.shrink_factor = "-";
    row.grow_factor = "-";
    row.wall_ms = marco_report.wall_ms;
    row.checks = marco_report.constraint_checks;
    row.map_solves = marco_report.map_solves;
    row.n_mus = marco_report.final_mus.size();
    row.n_mss = marco_report.final_mss.size();
    row.completed = marco_report.completed;
    csv << cli::format_stats_row(row) << '\n' << std::flush;

    all_completed = all_completed && chain_report.completed && marco_report.completed;
    if (chain_report.completed && marco_report.completed) {
      if (chain_report.final_mus != marco_report.final_mus ||
          chain_report.final_mss != marco_report.final_mss) {
        std::cerr << "mismatch: " << inst.name
                  << ": chain and marco disagree on the result sets\n";
        all_agreed = false;
      }
      if (chain_report.constraint_checks < chain_report.final_mus.size() ||
          marco_report.constraint_checks < marco_report.final_mus.size()) {
        std::cerr << "suspicious: " << inst.name
                  << ": fewer checks than MUSes\n";
        all_agreed = false;
      }
    }
  }

  return (all_completed && all_agreed) ? 0 : 1;
}
