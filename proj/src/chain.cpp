#include "chain.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace musen {

Chain::Chain(Node base, std::vector<int> additions)
    : base_(std::move(base)), additions_(std::move(additions)) {
  Node seen = base_;
  for (int ci : additions_) {
    if (ci < 1 || ci > base_.universe_size() || seen.contains(ci))
      throw std::invalid_argument("chain additions must be fresh constraint indices");
    seen.insert(ci);
  }
}

Node Chain::node_at(int j) const {
  if (j < 1 || j > length()) throw std::out_of_range("chain index");
  Node node = base_;
  for (int i = 0; i < j - 1; ++i) node.insert(additions_[i]);
  return node;
}

int GateConfig::S(int k) const {
  if (shrink_gate) return shrink_gate(k);
  // The tiny epsilon keeps exact products like 0.6*5 from landing just below
  // the integer they mathematically equal.
  return static_cast<int>(std::floor(shrink_factor * k + 1e-9));
}

int GateConfig::G(int k) const {
  if (grow_gate) return grow_gate(k);
  return static_cast<int>(std::floor(grow_factor * k + 1e-9));
}

std::optional<std::pair<Node, Node>> find_couple(Strategy strategy,
                                                 UnexploredMap& map,
                                                 double pivot_fix_probability,
                                                 uint64_t rng_seed,
                                                 bool strict_extremes) {
  if (strategy == Strategy::pivot) {
    if (auto pivot = map.find_pivot(pivot_fix_probability, rng_seed)) {
      auto low = map.find_minimal_subset_of(*pivot, strict_extremes);
      auto high = map.find_maximal_superset_of(*pivot, strict_extremes);
      // The pivot itself is an unexplored model, so both ends exist.
      return std::make_pair(std::move(*low), std::move(*high));
    }
    // The frozen valuation has no unexplored extension; fall back to basic.
  }
  auto low = map.find_minimal_subset_of(Node::full_set(map.size()), strict_extremes);
  if (!low) return std::nullopt;
  auto high = map.find_maximal_superset_of(*low, strict_extremes);
  return std::make_pair(std::move(*low), std::move(*high));
}

Chain build_chain(const Node& low, const Node& high, ChainOrder order,
                  uint64_t rng_seed) {
  if (!low.subset_of(high))
    throw std::invalid_argument("couple is not subset-related");
  std::vector<int> additions;
  for (int ci : high.members())
    if (!low.contains(ci)) additions.push_back(ci);
  if (order == ChainOrder::seeded_shuffle && additions.size() > 1) {
    std::mt19937_64 rng(rng_seed);
    for (std::size_t i = additions.size() - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
      std::swap(additions[i], additions[j]);
    }
  }
  return Chain(low, std::move(additions));
}

BoundaryResult binary_search_boundary(const Chain& chain,
                                      ConstraintChecker& checker) {
  const int k = chain.length();
  const uint64_t before = checker.checks();

  // Invariant: nodes 1..lo satisfiable, nodes hi+1..k unsatisfiable. The
  // midpoint rounds up so both endpoints get decided without pre-checks.
  int lo = 0, hi = k;
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (checker.is_satisfiable(chain.node_at(mid)))
      lo = mid;
    else
      hi = mid - 1;
  }

  BoundaryResult res;
  res.checks_used = static_cast<int>(checker.checks() - before);

  int budget = 1;  // ⌈log2(k+1)⌉ + 1
  {
    int c = 0;
    while ((1 << c) < k + 1) ++c;
    budget = c + 1;
  }
  if (res.checks_used > budget)
    throw std::logic_error("binary search exceeded its check budget");

  if (lo == k)
    res.local_mss = k;
  else if (lo == 0)
    res.local_mus = 1;
  else {
    res.local_mss = lo;
    res.local_mus = lo + 1;
  }
  return res;
}

Node shrink_to_mus(const Node& unsat_node, ConstraintChecker& checker,
                   bool verify_precondition) {
  if (verify_precondition && checker.is_satisfiable(unsat_node))
    throw PreconditionViolation("shrink_to_mus: node is satisfiable");
  Node m = unsat_node;
  for (int ci : unsat_node.members()) {
    const Node candidate = m.without(ci);
    if (!checker.is_satisfiable(candidate)) m = candidate;
  }
  return m;
}

Node grow_to_mss(const Node& sat_node, ConstraintChecker& checker,
                 bool verify_precondition) {
  if (verify_precondition && !checker.is_satisfiable(sat_node))
    throw PreconditionViolation("grow_to_mss: node is unsatisfiable");
  Node m = sat_node;
  for (int ci = 1; ci <= sat_node.universe_size(); ++ci) {
    if (sat_node.contains(ci)) continue;
    const Node candidate = m.with(ci);
    if (checker.is_satisfiable(candidate)) m = candidate;
  }
  return m;
}

ChainOutcome process_chain(const Chain& chain, const GateConfig& gates,
                           ConstraintChecker& checker, const YieldFn& yield) {
  const uint64_t before = checker.checks();
  const BoundaryResult boundary = binary_search_boundary(chain, checker);
  const int k = chain.length();

  ChainOutcome out;
  if (boundary.local_mus) {
    Node nu = chain.node_at(*boundary.local_mus);
    // Non-strict on purpose: with shrink_factor 1 a local MUS sitting at the
    // chain top (u == k == S(k)) must still be shrunk, or it would linger as a
    // raw candidate and make the second phase mandatory.
    if (*boundary.local_mus <= gates.S(k)) {
      nu = shrink_to_mus(nu, checker);
      if (yield) yield(ResultKind::mus, nu);
      out.mus_yielded = true;
    }
    out.unsat_node = std::move(nu);
  }
  if (boundary.local_mss) {
    Node ns = chain.node_at(*boundary.local_mss);
    if (*boundary.local_mss > k - gates.G(k)) {
      ns = grow_to_mss(ns, checker);
      if (yield) yield(ResultKind::mss, ns);
      out.mss_yielded = true;
    }
    out.sat_node = std::move(ns);
  }
  out.checks_used = static_cast<int>(checker.checks() - before);
  return out;
}

}  // namespace musen
