#pragma once

// Shared helpers for the test suites. The evaluators here are written as
// directly from the definitions as possible — naive double loops over
// assignments and subsets — so they can serve as independent ground truth for
// the production implementations.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string_view>
#include <vector>

#include "cnf.hpp"
#include "oracle.hpp"

namespace musen::test {

// The running 4-constraint example: c1 = (a), c2 = (¬a), c3 = (b),
// c4 = (¬a ∨ ¬b). MUSes {c1,c2} and {c1,c3,c4}; MSSes {c1,c3}, {c1,c4},
// {c2,c3,c4}.
inline const char* kExample1Dimacs = "p cnf 2 4\n1 0\n-1 0\n2 0\n-1 -2 0\n";

inline ConstraintSet example1() { return parse_dimacs(kExample1Dimacs).set; }

inline Node node_of(std::string_view bits) { return Node::from_bits(bits); }

// Truth of clause ci (1-based) under the assignment encoded in bits of
// `assignment` (bit v-1 = variable v).
inline bool clause_true(const ConstraintSet& cs, int ci, uint32_t assignment) {
  for (int lit : cs.clause(ci).literals) {
    const bool var_true = (assignment >> (std::abs(lit) - 1)) & 1u;
    if ((lit > 0) == var_true) return true;
  }
  return false;
}

// Definition-level satisfiability of a subset: some assignment satisfies
// every selected clause. Exponential in num_vars; keep instances tiny.
inline bool naive_satisfiable(const ConstraintSet& cs, const Node& node) {
  const uint32_t assignments = uint32_t{1} << cs.num_vars();
  for (uint32_t a = 0; a < assignments; ++a) {
    bool all = true;
    for (int ci : node.members()) {
      if (!clause_true(cs, ci, a)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

// Definition-level MUS/MSS/MCS enumeration by filtering all 2^n subsets.
inline OracleResult naive_oracle(const ConstraintSet& cs) {
  const int n = cs.size();
  const uint32_t total = uint32_t{1} << n;
  std::vector<char> sat(total);
  std::vector<Node> nodes;
  nodes.reserve(total);
  for (uint32_t mask = 0; mask < total; ++mask) {
    Node node(n);
    for (int ci = 1; ci <= n; ++ci)
      if ((mask >> (ci - 1)) & 1u) node.insert(ci);
    nodes.push_back(node);
    sat[mask] = naive_satisfiable(cs, node);
  }
  OracleResult out;
  for (uint32_t mask = 0; mask < total; ++mask) {
    if (sat[mask]) {
      bool maximal = true;
      for (int ci = 1; ci <= n && maximal; ++ci)
        if (!nodes[mask].contains(ci) && sat[mask | (uint32_t{1} << (ci - 1))])
          maximal = false;
      if (maximal) out.mss.push_back(nodes[mask]);
    } else {
      bool minimal = true;
      for (int ci = 1; ci <= n && minimal; ++ci)
        if (nodes[mask].contains(ci) && !sat[mask ^ (uint32_t{1} << (ci - 1))])
          minimal = false;
      if (minimal) out.mus.push_back(nodes[mask]);
    }
  }
  std::sort(out.mus.begin(), out.mus.end());
  std::sort(out.mss.begin(), out.mss.end());
  for (const Node& m : out.mss) out.mcs.push_back(m.complement());
  std::sort(out.mcs.begin(), out.mcs.end());
  return out;
}

}  // namespace musen::test
