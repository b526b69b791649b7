// Command-line front end for one enumeration run: streams every MUS/MSS the
// run certifies as a line on stdout the moment it is found, appends MCS lines
// once the run has completed, and optionally records a stats row. Exit codes:
// 0 complete, 1 budget-truncated, 2 flag or input errors.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli_common.hpp"
#include "enumerator.hpp"
#include "marco.hpp"
#include "oracle.hpp"

using namespace musen;

int main(int argc, char** argv) {
  CLI::App app{"Online MUS/MSS enumeration over a DIMACS CNF constraint set"};

  std::string input_path;
  std::string algorithm = "chain";
  std::string strategy = "basic";
  std::string mode = "all";
  std::string chain_order = "ascending";
  std::string stats_path;
  double shrink_factor = 1.0;
  double grow_factor = 1.0;
  double pivot_fix_prob = 0.5;
  double timeout_s = 0.0;
  uint64_t seed = 0;
  bool strict_extremes = false;
  bool allow_empty_clause = false;

  app.add_option("input", input_path, "DIMACS CNF file")->required();
  app.add_option("--algorithm", algorithm, "chain | marco | oracle")
      ->check(CLI::IsMember({"chain", "marco", "oracle"}))
      ->capture_default_str();
  app.add_option("--strategy", strategy, "couple search: basic | pivot")
      ->check(CLI::IsMember({"basic", "pivot"}))
      ->capture_default_str();
  app.add_option("--shrink-factor", shrink_factor,
                 "shrink gate slope in [0,1]; S(x) = floor(a*x)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--grow-factor", grow_factor,
                 "grow gate slope in [0,1]; G(x) = floor(b*x)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--mode", mode, "all | mus-only | mss-only")
      ->check(CLI::IsMember({"all", "mus-only", "mss-only"}))
      ->capture_default_str();
  app.add_option("--pivot-fix-prob", pivot_fix_prob,
                 "probability a pivot freezes each variable")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--seed", seed, "RNG seed")->capture_default_str();
  app.add_option("--timeout", timeout_s, "time budget in seconds; 0 = none")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--chain-order", chain_order,
                 "gap insertion order: ascending | shuffle")
      ->check(CLI::IsMember({"ascending", "shuffle"}))
      ->capture_default_str();
  app.add_flag("--strict-extremes", strict_extremes,
               "tighten couple endpoints to set-extremal unexplored nodes");
  app.add_option("--stats", stats_path, "append a CSV stats row to this file");
  app.add_flag("--allow-empty-clause", allow_empty_clause,
               "accept empty clauses in the input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  ConstraintSet cs;
  try {
    std::ifstream in(input_path);
    if (!in) {
      std::cerr << "error: cannot read '" << input_path << "'\n";
      return 2;
    }
    ParsedCnf parsed = parse_dimacs(in, allow_empty_clause);
    if (parsed.header_mismatch)
      std::cerr << "warning: clause count differs from header in '"
                << input_path << "'\n";
    cs = std::move(parsed.set);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  cli::StatsRow row;
  row.instance = input_path;
  row.algorithm = algorithm;
  row.seed = seed;

  if (algorithm == "oracle") {
    OracleResult oracle;
    try {
      const auto start = std::chrono::steady_clock::now();
      oracle = brute_force(cs);
      row.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    }
    for (const Node& m : oracle.mus)
      if (m.count() > 0) std::cout << cli::result_line("MUS", m) << '\n';
    for (const Node& m : oracle.mss)
      if (m.count() > 0) std::cout << cli::result_line("MSS", m) << '\n';
    for (const Node& m : oracle.mcs)
      if (m.count() > 0) std::cout << cli::result_line("MCS", m) << '\n';
    std::cout.flush();
    row.n_mus = oracle.mus.size();
    row.n_mss = oracle.mss.size();
    row.completed = true;
    if (!stats_path.empty() && !cli::append_stats_row(stats_path, row)) return 2;
    return 0;
  }

  RunConfig cfg;
  cfg.strategy = strategy == "pivot" ? Strategy::pivot : Strategy::basic;
  cfg.gates.shrink_factor = shrink_factor;
  cfg.gates.grow_factor = grow_factor;
  cfg.mode = mode == "mus-only"   ? EnumMode::mus_only
             : mode == "mss-only" ? EnumMode::mss_only
                                  : EnumMode::all;
  cfg.pivot_fix_probability = pivot_fix_prob;
  cfg.rng_seed = seed;
  cfg.time_budget = std::chrono::milliseconds(
      static_cast<long long>(std::llround(timeout_s * 1000.0)));
  cfg.chain_order = chain_order == "shuffle" ? ChainOrder::seeded_shuffle
                                             : ChainOrder::ascending_index;
  cfg.strict_extremes = strict_extremes;

  // Online contract: the line leaves the process before the next check runs.
  const EventSink sink = [](const EnumerationEvent& ev) {
    if (ev.node.count() == 0) return;  // keep the one-index-minimum grammar
    std::cout << cli::result_line(cli::kind_name(ev.kind), ev.node) << std::endl;
  };

  const RunReport report = algorithm == "marco" ? marco_enumerate(cs, cfg, sink)
                                                : enumerate(cs, cfg, sink);

  if (report.completed) {
    for (const Node& m : report.final_mcs)
      if (m.count() > 0) std::cout << cli::result_line("MCS", m) << '\n';
    std::cout.flush();
  }

  if (algorithm == "chain") {
    row.strategy = strategy;
    row.shrink_factor = cli::format_double(shrink_factor);
    row.grow_factor = cli::format_double(grow_factor);
  }
  row.wall_ms = report.wall_ms;
  row.checks = report.constraint_checks;
  row.map_solves = report.map_solves;
  row.n_mus = report.final_mus.size();
  row.n_mss = report.final_mss.size();
  row.completed = report.completed;
  if (!stats_path.empty() && !cli::append_stats_row(stats_path, row)) return 2;

  return report.completed ? 0 : 1;
}
