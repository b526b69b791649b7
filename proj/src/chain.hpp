#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cnf.hpp"
#include "sat_engine.hpp"
#include "unexplored_map.hpp"

namespace musen {

// How the endpoints of a fresh chain are picked from the map.
enum class Strategy { basic, pivot };

// Order in which the gap constraints are threaded into the chain.
enum class ChainOrder { ascending_index, seeded_shuffle };

enum class ResultKind { mus, mss };

class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A strictly increasing sequence of nodes N_1 ⊂ N_2 ⊂ ... ⊂ N_k, stored as a
// base node plus the one-constraint additions that produce each successor.
// Indices are 1-based: node_at(1) == base, node_at(k) == base ∪ additions.
class Chain {
 public:
  Chain(Node base, std::vector<int> additions);

  int length() const { return static_cast<int>(additions_.size()) + 1; }
  const Node& base() const { return base_; }
  const std::vector<int>& additions() const { return additions_; }
  Node node_at(int j) const;

 private:
  Node base_;
  std::vector<int> additions_;
};

// Shrink/grow admission gates. A local MUS at chain index u is shrunk when
// u <= S(k); a local MSS at index s is grown when s > k - G(k). Both admit
// exactly S(k) respectively G(k) of the k chain positions. The default
// gates are floor-of-linear, S(x) = ⌊shrink_factor·x⌋ and
// G(x) = ⌊grow_factor·x⌋; arbitrary functions can be swapped in through the
// hooks.  Factors 1 make every boundary admissible, factors 0 none.
struct GateConfig {
  double shrink_factor = 1.0;
  double grow_factor = 1.0;
  std::function<int(int)> shrink_gate;  // overrides shrink_factor when set
  std::function<int(int)> grow_gate;    // overrides grow_factor when set

  int S(int k) const;
  int G(int k) const;
};

// Endpoints for the next chain: an unexplored couple (low ⊆ high). basic
// takes a heuristically minimal unexplored node and a maximal unexplored
// superset of it; pivot first locks a random partial valuation and extends
// it both ways, falling back to basic when the pivot query has no model.
// Returns nullopt exactly when the map is empty.
std::optional<std::pair<Node, Node>> find_couple(Strategy strategy,
                                                 UnexploredMap& map,
                                                 double pivot_fix_probability,
                                                 uint64_t rng_seed,
                                                 bool strict_extremes);

// Threads the constraints of high \ low into a chain from low to high, in
// ascending index order or in a seed-determined shuffle.
Chain build_chain(const Node& low, const Node& high, ChainOrder order,
                  uint64_t rng_seed = 0);

// Outcome of the boundary search on a chain whose nodes are monotone in
// satisfiability: indices of the last satisfiable node (local MSS) and the
// first unsatisfiable node (local MUS). Exactly one of them is absent when
// the whole chain is satisfiable (k, nullopt) or unsatisfiable (nullopt, 1);
// otherwise they are adjacent (j, j+1).
struct BoundaryResult {
  std::optional<int> local_mss;
  std::optional<int> local_mus;
  int checks_used = 0;
};

// Midpoint bisection over the chain; no endpoint pre-checks. Uses at most
// ⌈log2(k+1)⌉ checks, which is verified on every call against the documented
// ⌈log2(k+1)⌉+1 budget.
BoundaryResult binary_search_boundary(const Chain& chain,
                                      ConstraintChecker& checker);

// Deletion-based reduction of an unsatisfiable node to one of its MUSes:
// each member, in ascending index order, is dropped iff the node stays
// unsatisfiable without it. Always |node| checks. The caller must pass an
// unsatisfiable node; set verify_precondition to spend one extra check
// surfacing a violation as PreconditionViolation.
Node shrink_to_mus(const Node& unsat_node, ConstraintChecker& checker,
                   bool verify_precondition = false);

// Dual extension of a satisfiable node to one of its MSSes: each outside
// constraint, ascending, is added iff satisfiability is kept. Always
// |complement| checks.
Node grow_to_mss(const Node& sat_node, ConstraintChecker& checker,
                 bool verify_precondition = false);

struct ChainOutcome {
  // The determined extremal nodes: unsat_node is the (possibly shrunk) local
  // MUS, sat_node the (possibly grown) local MSS. Their status is implied by
  // the slot, so the caller classifies without re-checking. At least one is
  // present for every nonempty chain.
  std::optional<Node> unsat_node;
  std::optional<Node> sat_node;
  bool mus_yielded = false;  // unsat_node was shrunk and reported as a MUS
  bool mss_yielded = false;  // sat_node was grown and reported as an MSS
  int checks_used = 0;
};

using YieldFn = std::function<void(ResultKind, const Node&)>;

// Boundary search plus gated refinement: shrink (and yield a MUS) when the
// local MUS sits at or below S(k), grow (and yield an MSS) when the local MSS
// sits above k - G(k). Nodes that fail their gate are returned raw.
ChainOutcome process_chain(const Chain& chain, const GateConfig& gates,
                           ConstraintChecker& checker,
                           const YieldFn& yield = {});

}  // namespace musen
