#include "enumerator.hpp"

#include <algorithm>
#include <random>

namespace musen {

namespace {

std::vector<Node> sorted_vector(const NodeSet& set) {
  std::vector<Node> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Node> complements(const std::vector<Node>& nodes) {
  std::vector<Node> out;
  out.reserve(nodes.size());
  for (const Node& n : nodes) out.push_back(n.complement());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void classify_and_block(const Node& node, bool satisfiable, UnexploredMap& map,
                        CandidateSets& candidates) {
  if (satisfiable) {
    candidates.mss_can.insert(node);
    map.block_subsets(node);
  } else {
    candidates.mus_can.insert(node);
    map.block_supersets(node);
  }
}

std::vector<Node> subset_minimal_elements(const std::vector<Node>& nodes) {
  NodeSet distinct(nodes.begin(), nodes.end());
  std::vector<Node> pool(distinct.begin(), distinct.end());
  std::vector<Node> out;
  for (const Node& x : pool) {
    bool minimal = true;
    for (const Node& y : pool) {
      if (y != x && y.subset_of(x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Node> subset_maximal_elements(const std::vector<Node>& nodes) {
  NodeSet distinct(nodes.begin(), nodes.end());
  std::vector<Node> pool(distinct.begin(), distinct.end());
  std::vector<Node> out;
  for (const Node& x : pool) {
    bool maximal = true;
    for (const Node& y : pool) {
      if (y != x && x.subset_of(y)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<std::vector<Node>, std::vector<Node>> extract_phase2(
    const CandidateSets& candidates) {
  return {subset_minimal_elements(
              std::vector<Node>(candidates.mus_can.begin(), candidates.mus_can.end())),
          subset_maximal_elements(
              std::vector<Node>(candidates.mss_can.begin(), candidates.mss_can.end()))};
}

RunReport enumerate(const ConstraintSet& cs, const RunConfig& cfg,
                    const EventSink& sink) {
  const auto start = std::chrono::steady_clock::now();
  const int n = cs.size();

  SubsetSolver solver(cs);
  if (cfg.time_budget.count() > 0) solver.set_deadline(start + cfg.time_budget);

  UnexploredMap map(n);
  CandidateSets candidates;
  NodeSet yielded_mus, yielded_mss;
  std::mt19937_64 rng(cfg.rng_seed);
  RunReport report;

  auto elapsed_ms = [&start]() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  };
  auto emit = [&](ResultKind kind, const Node& node, Phase phase) {
    EnumerationEvent ev{kind,          node,
                        phase,         solver.checks(),
                        map.map_solves(), elapsed_ms()};
    report.events.push_back(ev);
    if (kind == ResultKind::mus)
      yielded_mus.insert(node);
    else
      yielded_mss.insert(node);
    if (sink) sink(ev);
  };

  bool completed = false;
  try {
    for (;;) {
      const uint64_t couple_seed = rng();
      const uint64_t order_seed = rng();
      const auto couple = find_couple(cfg.strategy, map,
                                      cfg.pivot_fix_probability, couple_seed,
                                      cfg.strict_extremes);
      if (!couple) {
        completed = true;
        break;
      }
      ++report.iterations;
      const Chain chain =
          build_chain(couple->first, couple->second, cfg.chain_order, order_seed);
      const ChainOutcome out = process_chain(
          chain, cfg.gates, solver,
          [&](ResultKind kind, const Node& node) { emit(kind, node, Phase::online); });

      if (out.unsat_node) {
        if (cfg.mode != EnumMode::mss_only)
          candidates.mus_can.insert(*out.unsat_node);
        map.block_supersets(*out.unsat_node);
        // In MUS-only mode a certified MUS also retires its subsets: they are
        // satisfiable but can never be MUSes, and MSS completeness is waived.
        if (cfg.mode == EnumMode::mus_only && out.mus_yielded)
          map.block_subsets(*out.unsat_node);
      }
      if (out.sat_node) {
        if (cfg.mode != EnumMode::mus_only)
          candidates.mss_can.insert(*out.sat_node);
        map.block_subsets(*out.sat_node);
        // Dually, in MSS-only mode supersets of a certified MSS hold no
        // further MSSes.
        if (cfg.mode == EnumMode::mss_only && out.mss_yielded)
          map.block_supersets(*out.sat_node);
      }
    }
  } catch (const BudgetExhausted&) {
    completed = false;
  }

  if (completed) {
    auto [mus_set, mss_set] = extract_phase2(candidates);
    for (const Node& m : mus_set)
      if (!yielded_mus.count(m)) emit(ResultKind::mus, m, Phase::phase2);
    for (const Node& m : mss_set)
      if (!yielded_mss.count(m)) emit(ResultKind::mss, m, Phase::phase2);
    report.final_mus = std::move(mus_set);
    report.final_mss = std::move(mss_set);
  } else {
    // Online yields were certified before the budget ran out.
    report.final_mus = sorted_vector(yielded_mus);
    report.final_mss = sorted_vector(yielded_mss);
  }
  report.final_mcs = complements(report.final_mss);
  report.constraint_checks = solver.checks();
  report.map_solves = map.map_solves();
  report.wall_ms = elapsed_ms();
  report.completed = completed;
  return report;
}

}  // namespace musen
