#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cnf.hpp"
#include "sat_engine.hpp"

namespace musen {

// Symbolic map of the unexplored part of the powerset of {c_1..c_n}: a CNF
// formula over meta-variables x_1..x_n whose models are exactly the nodes
// whose status is still unknown. Fresh maps have the empty formula (every
// node unexplored). Exploration is recorded by blocking whole cones:
//   block_subsets(N)   adds  ∨_{c_i ∉ N} x_i    (kills N and all subsets)
//   block_supersets(N) adds  ∨_{c_i ∈ N} ¬x_i   (kills N and all supersets)
// Queries are solves of one dedicated engine instance; their count is the
// map_solves statistic.
class UnexploredMap {
 public:
  // keep_clause_log retains an ordered copy of every blocking clause for
  // debugging and tests; it is off by default to save memory.
  explicit UnexploredMap(int n, bool keep_clause_log = false);

  int size() const { return n_; }

  void block_subsets(const Node& node);
  void block_supersets(const Node& node);

  bool is_empty();
  // Membership probe (one solve with a fully frozen assignment); debug aid.
  bool contains(const Node& node);

  // An arbitrary unexplored node, value bias per polarity.
  std::optional<Node> find_unexplored(Polarity bias = Polarity::free_choice);
  // An unexplored subset of seed (including seed itself). With strict=false a
  // single prefer-false solve is made: a heuristically small witness. With
  // strict=true the witness is tightened to a subset-minimal unexplored node
  // by repeatedly forcing one further member off (ascending index) until no
  // smaller witness exists. The dual holds for find_maximal_superset_of.
  std::optional<Node> find_minimal_subset_of(const Node& seed, bool strict);
  std::optional<Node> find_maximal_superset_of(const Node& seed, bool strict);

  // Freezes each meta-variable independently with probability fix_probability
  // to a uniformly random value (all derived deterministically from rng_seed)
  // and asks for an unexplored node extending that partial valuation.
  std::optional<Node> find_pivot(double fix_probability, uint64_t rng_seed);

  uint64_t map_solves() const { return engine_.num_solves(); }

  // Ordered blocking clauses; only populated when keep_clause_log was set.
  const std::vector<std::vector<int>>& blocked_clause_log() const { return log_; }
  // Current map formula in DIMACS form (debugging / external inspection).
  std::string dump_dimacs() const;

 private:
  Node model_to_node(const SolveResult& r) const;

  int n_;
  bool keep_log_;
  SatEngine engine_;
  std::vector<std::vector<int>> log_;
};

// The random partial valuation used by find_pivot, exposed so tests and
// callers can reproduce the draw: entry i-1 is the forced value of x_i, or
// nullopt when the variable is left free.
std::vector<std::optional<bool>> sample_pivot_valuation(int n,
                                                        double fix_probability,
                                                        uint64_t rng_seed);

}  // namespace musen
