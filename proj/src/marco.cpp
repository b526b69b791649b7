#include "marco.hpp"

#include <algorithm>

namespace musen {

RunReport marco_enumerate(const ConstraintSet& cs, const RunConfig& cfg,
                          const EventSink& sink) {
  const auto start = std::chrono::steady_clock::now();
  const int n = cs.size();

  SubsetSolver solver(cs);
  if (cfg.time_budget.count() > 0) solver.set_deadline(start + cfg.time_budget);

  UnexploredMap map(n);
  NodeSet mus_found, mss_found;
  RunReport report;

  auto elapsed_ms = [&start]() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  };
  auto emit = [&](ResultKind kind, const Node& node) {
    EnumerationEvent ev{kind,          node,
                        Phase::online, solver.checks(),
                        map.map_solves(), elapsed_ms()};
    report.events.push_back(ev);
    if (kind == ResultKind::mus)
      mus_found.insert(node);
    else
      mss_found.insert(node);
    if (sink) sink(ev);
  };

  bool completed = false;
  try {
    for (;;) {
      // Strict maximality is load-bearing here, unlike in the chain loop.
      const auto nmax = map.find_maximal_superset_of(Node(n), /*strict=*/true);
      if (!nmax) {
        completed = true;
        break;
      }
      ++report.iterations;
      if (solver.is_satisfiable(*nmax)) {
        emit(ResultKind::mss, *nmax);
        map.block_subsets(*nmax);
      } else {
        const Node mus = shrink_to_mus(*nmax, solver);
        emit(ResultKind::mus, mus);
        map.block_supersets(mus);
      }
    }
  } catch (const BudgetExhausted&) {
    completed = false;
  }

  report.final_mus.assign(mus_found.begin(), mus_found.end());
  report.final_mss.assign(mss_found.begin(), mss_found.end());
  std::sort(report.final_mus.begin(), report.final_mus.end());
  std::sort(report.final_mss.begin(), report.final_mss.end());
  report.final_mcs.reserve(report.final_mss.size());
  for (const Node& m : report.final_mss) report.final_mcs.push_back(m.complement());
  std::sort(report.final_mcs.begin(), report.final_mcs.end());
  report.constraint_checks = solver.checks();
  report.map_solves = map.map_solves();
  report.wall_ms = elapsed_ms();
  report.completed = completed;
  return report;
}

}  // namespace musen
