#include "unexplored_map.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace musen {

UnexploredMap::UnexploredMap(int n, bool keep_clause_log)
    : n_(n), keep_log_(keep_clause_log) {
  if (n < 0) throw std::invalid_argument("negative universe size");
  engine_.ensure_vars(n);
}

void UnexploredMap::block_subsets(const Node& node) {
  std::vector<int> clause;
  for (int ci = 1; ci <= n_; ++ci)
    if (!node.contains(ci)) clause.push_back(ci);
  if (keep_log_) log_.push_back(clause);
  engine_.add_clause(std::move(clause));
}

void UnexploredMap::block_supersets(const Node& node) {
  std::vector<int> clause;
  for (int ci : node.members()) clause.push_back(-ci);
  if (keep_log_) log_.push_back(clause);
  engine_.add_clause(std::move(clause));
}

bool UnexploredMap::is_empty() {
  return engine_.solve({}).status == SolveStatus::unsat;
}

bool UnexploredMap::contains(const Node& node) {
  SolveRequest req;
  for (int ci = 1; ci <= n_; ++ci)
    req.frozen.push_back(node.contains(ci) ? ci : -ci);
  return engine_.solve(req).status == SolveStatus::sat;
}

Node UnexploredMap::model_to_node(const SolveResult& r) const {
  Node node(n_);
  for (int ci = 1; ci <= n_; ++ci)
    if (r.is_true(ci)) node.insert(ci);
  return node;
}

std::optional<Node> UnexploredMap::find_unexplored(Polarity bias) {
  SolveRequest req;
  req.polarity = bias;
  const SolveResult r = engine_.solve(req);
  if (r.status == SolveStatus::unsat) return std::nullopt;
  return model_to_node(r);
}

std::optional<Node> UnexploredMap::find_minimal_subset_of(const Node& seed,
                                                          bool strict) {
  SolveRequest req;
  req.polarity = Polarity::prefer_false;
  for (int ci = 1; ci <= n_; ++ci)
    if (!seed.contains(ci)) req.frozen.push_back(-ci);
  const SolveResult r = engine_.solve(req);
  if (r.status == SolveStatus::unsat) return std::nullopt;
  Node m = model_to_node(r);
  if (!strict) return m;

  // Tightening: ask for a witness below m with one further member (lowest
  // index first) forced off. UNSAT pins that member; a model replaces m and
  // stays valid because earlier UNSAT answers covered supersets of it.
  for (int ci = 1; ci <= n_; ++ci) {
    if (!m.contains(ci)) continue;
    SolveRequest probe;
    probe.polarity = Polarity::prefer_false;
    for (int j = 1; j <= n_; ++j)
      if (!m.contains(j) || j == ci) probe.frozen.push_back(-j);
    const SolveResult s = engine_.solve(probe);
    if (s.status == SolveStatus::sat) m = model_to_node(s);
  }
  return m;
}

std::optional<Node> UnexploredMap::find_maximal_superset_of(const Node& seed,
                                                            bool strict) {
  SolveRequest req;
  req.polarity = Polarity::prefer_true;
  for (int ci : seed.members()) req.frozen.push_back(ci);
  const SolveResult r = engine_.solve(req);
  if (r.status == SolveStatus::unsat) return std::nullopt;
  Node m = model_to_node(r);
  if (!strict) return m;

  for (int ci = 1; ci <= n_; ++ci) {
    if (m.contains(ci)) continue;
    SolveRequest probe;
    probe.polarity = Polarity::prefer_true;
    for (int j : m.members()) probe.frozen.push_back(j);
    probe.frozen.push_back(ci);
    const SolveResult s = engine_.solve(probe);
    if (s.status == SolveStatus::sat) m = model_to_node(s);
  }
  return m;
}

std::vector<std::optional<bool>> sample_pivot_valuation(int n,
                                                        double fix_probability,
                                                        uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  auto next_unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<std::optional<bool>> valuation(n);
  for (int i = 0; i < n; ++i) {
    if (next_unit() < fix_probability) valuation[i] = (rng() & 1u) != 0;
  }
  return valuation;
}

std::optional<Node> UnexploredMap::find_pivot(double fix_probability,
                                              uint64_t rng_seed) {
  const auto valuation = sample_pivot_valuation(n_, fix_probability, rng_seed);
  SolveRequest req;
  for (int ci = 1; ci <= n_; ++ci) {
    if (valuation[ci - 1].has_value())
      req.frozen.push_back(*valuation[ci - 1] ? ci : -ci);
  }
  const SolveResult r = engine_.solve(req);
  if (r.status == SolveStatus::unsat) return std::nullopt;
  return model_to_node(r);
}

std::string UnexploredMap::dump_dimacs() const {
  std::ostringstream out;
  out << "p cnf " << n_ << ' ' << engine_.clause_database().size() << '\n';
  for (const std::vector<int>& c : engine_.clause_database()) {
    std::vector<int> sorted(c);
    std::sort(sorted.begin(), sorted.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    for (int lit : sorted) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace musen
