#pragma once

#include <vector>

#include "cnf.hpp"

namespace musen {

struct OracleResult {
  std::vector<Node> mus;  // each sorted in ascending bit-string order
  std::vector<Node> mss;
  std::vector<Node> mcs;  // complements of mss
};

// Definition-level ground truth over all 2^n subsets; guarded to n <= 20
// constraints (std::invalid_argument beyond). When the variable count is at
// most 20 the satisfiability of every subset falls out of one truth-table
// sweep: assignments are visited in Gray-code order with incremental
// per-clause satisfied-literal counters, each assignment's satisfied-clause
// set is recorded, and a downward closure over the subset lattice marks all
// satisfiable subsets. Larger variable counts fall back to one SAT check per
// subset.
OracleResult brute_force(const ConstraintSet& cs);

// MUS/MCS hitting-set duality check over a universe of n constraints: true
// iff mus_set is exactly the collection of minimal hitting sets of mcs_set.
// Explicit enumeration; guarded to n <= 20.
bool verify_duality(const std::vector<Node>& mus_set,
                    const std::vector<Node>& mcs_set, int n);

}  // namespace musen
