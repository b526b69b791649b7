#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "sat_engine.hpp"

namespace musen {

namespace {

Node node_from_mask(uint32_t mask, int n) {
  Node node(n);
  while (mask) {
    const int b = std::countr_zero(mask);
    node.insert(b + 1);
    mask &= mask - 1;
  }
  return node;
}

// Satisfiability of every subset via the truth table: each assignment
// contributes its satisfied-clause set as a "satisfiable" stamp, and every
// subset of a stamped set is satisfiable (downward closure); everything else
// is unsatisfiable. Assignments are walked in Gray-code order so each step
// flips one variable and touches only the clauses containing it.
std::vector<char> subset_table_by_truth_table(const ConstraintSet& cs) {
  const int n = cs.size();
  const int nv = cs.num_vars();
  std::vector<char> sat(std::size_t{1} << n, 0);

  // occurrences[v]: (clause index 0-based, sign) pairs for variable v.
  std::vector<std::vector<std::pair<int, bool>>> occurrences(nv + 1);
  std::vector<int> true_count(n, 0);
  uint32_t ok = 0;  // clauses currently satisfied, all-false start
  for (int ci = 0; ci < n; ++ci) {
    for (int lit : cs.clauses()[ci].literals) {
      occurrences[std::abs(lit)].push_back({ci, lit > 0});
      if (lit < 0) ++true_count[ci];
    }
    if (true_count[ci] > 0) ok |= uint32_t{1} << ci;
  }
  std::vector<char> assigned_true(nv + 1, 0);

  sat[ok] = 1;
  const uint64_t total = uint64_t{1} << nv;
  for (uint64_t step = 1; step < total; ++step) {
    const int v = std::countr_zero(step) + 1;  // Gray code: flip this variable
    assigned_true[v] ^= 1;
    const bool now_true = assigned_true[v];
    for (const auto& [ci, positive] : occurrences[v]) {
      const int delta = (positive == now_true) ? 1 : -1;
      true_count[ci] += delta;
      if (true_count[ci] == 0)
        ok &= ~(uint32_t{1} << ci);
      else
        ok |= uint32_t{1} << ci;
    }
    sat[ok] = 1;
  }

  // Downward closure, high masks first so cascades finish in one sweep.
  for (uint32_t mask = static_cast<uint32_t>(sat.size()) - 1; mask > 0; --mask) {
    if (!sat[mask]) continue;
    uint32_t rest = mask;
    while (rest) {
      const uint32_t bit = rest & (~rest + 1);
      sat[mask ^ bit] = 1;
      rest ^= bit;
    }
  }
  return sat;
}

std::vector<char> subset_table_by_solver(const ConstraintSet& cs) {
  const int n = cs.size();
  std::vector<char> sat(std::size_t{1} << n, 0);
  SubsetSolver solver(cs);
  for (uint32_t mask = 0; mask < sat.size(); ++mask)
    sat[mask] = solver.is_satisfiable(node_from_mask(mask, n));
  return sat;
}

}  // namespace

OracleResult brute_force(const ConstraintSet& cs) {
  const int n = cs.size();
  if (n > 20) throw std::invalid_argument("brute_force: more than 20 constraints");

  const std::vector<char> sat = cs.num_vars() <= 20
                                    ? subset_table_by_truth_table(cs)
                                    : subset_table_by_solver(cs);

  OracleResult out;
  const uint32_t full = (uint32_t{1} << n) - 1;
  for (uint32_t mask = 0; mask < sat.size(); ++mask) {
    if (sat[mask]) {
      bool maximal = true;
      uint32_t rest = full & ~mask;
      while (rest && maximal) {
        const uint32_t bit = rest & (~rest + 1);
        if (sat[mask | bit]) maximal = false;
        rest ^= bit;
      }
      if (maximal) out.mss.push_back(node_from_mask(mask, n));
    } else {
      bool minimal = true;
      uint32_t rest = mask;
      while (rest && minimal) {
        const uint32_t bit = rest & (~rest + 1);
        if (!sat[mask ^ bit]) minimal = false;
        rest ^= bit;
      }
      if (minimal) out.mus.push_back(node_from_mask(mask, n));
    }
  }
  std::sort(out.mus.begin(), out.mus.end());
  std::sort(out.mss.begin(), out.mss.end());
  out.mcs.reserve(out.mss.size());
  for (const Node& m : out.mss) out.mcs.push_back(m.complement());
  std::sort(out.mcs.begin(), out.mcs.end());
  return out;
}

bool verify_duality(const std::vector<Node>& mus_set,
                    const std::vector<Node>& mcs_set, int n) {
  if (n > 20) throw std::invalid_argument("verify_duality: more than 20 constraints");
  const std::size_t total = std::size_t{1} << n;

  std::vector<uint32_t> mcs_masks;
  mcs_masks.reserve(mcs_set.size());
  for (const Node& d : mcs_set) {
    uint32_t mask = 0;
    for (int ci : d.members()) mask |= uint32_t{1} << (ci - 1);
    mcs_masks.push_back(mask);
  }

  std::vector<char> hitting(total, 0);
  for (uint32_t mask = 0; mask < total; ++mask) {
    bool hits_all = true;
    for (uint32_t d : mcs_masks) {
      if ((mask & d) == 0) {
        hits_all = false;
        break;
      }
    }
    hitting[mask] = hits_all;
  }

  std::vector<Node> minimal_hitting;
  for (uint32_t mask = 0; mask < total; ++mask) {
    if (!hitting[mask]) continue;
    bool minimal = true;
    uint32_t rest = mask;
    while (rest && minimal) {
      const uint32_t bit = rest & (~rest + 1);
      if (hitting[mask ^ bit]) minimal = false;
      rest ^= bit;
    }
    if (minimal) minimal_hitting.push_back(node_from_mask(mask, n));
  }
  // Mask order and node bit-string order disagree; compare canonically.
  std::sort(minimal_hitting.begin(), minimal_hitting.end());

  std::vector<Node> mus_sorted(mus_set);
  std::sort(mus_sorted.begin(), mus_sorted.end());
  mus_sorted.erase(std::unique(mus_sorted.begin(), mus_sorted.end()),
                   mus_sorted.end());
  return mus_sorted == minimal_hitting;
}

}  // namespace musen
