#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "cnf.hpp"

namespace musen {

// Value preference for decision variables. prefer_false biases the returned
// model toward small assignments (the classic default-polarity trick for
// hunting minimal models), prefer_true toward large ones. The bias is a
// heuristic: only forced assignments are ever violated. free_choice leaves
// the choice to the engine (which deterministically picks false).
enum class Polarity { prefer_false, prefer_true, free_choice };

enum class SolveStatus { sat, unsat };

struct SolveRequest {
  // Literals fixed for this call only. Callers must not assign a variable
  // both ways between assumptions and frozen.
  std::vector<int> assumptions;
  Polarity polarity = Polarity::free_choice;
  // Partial assignment every returned model must extend, given as literals.
  std::vector<int> frozen;
};

struct SolveResult {
  SolveStatus status = SolveStatus::unsat;
  // 1-based truth values, valid when status == sat; covers every variable.
  std::vector<uint8_t> values;

  bool is_true(int var) const { return values[var] != 0; }
};

// Small incremental CDCL engine: two watched literals, unit propagation,
// first-UIP conflict analysis with backjumping, and a deterministic decision
// order (lowest variable index first, value per requested polarity). User
// clauses are permanent; learned clauses are kept in a separate store (so the
// database view stays pure) and garbage-collected between solves. Frozen and
// assumption literals are placed as decisions on their own levels, which
// keeps every learned clause valid across calls. Complete for any clause set.
class SatEngine {
 public:
  void ensure_vars(int upto);
  int num_vars() const { return num_vars_; }

  void add_clause(std::vector<int> lits);
  SolveResult solve(const SolveRequest& req = {});

  uint64_t num_solves() const { return solves_; }
  bool has_empty_clause() const { return has_empty_; }
  // Read-only view of the user clause database (literal order inside a clause
  // may change as watches move). Intended for debugging aids.
  const std::vector<std::vector<int>>& clause_database() const { return clauses_; }

 private:
  static int lit_index(int lit) {
    return 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0);
  }
  // Learned clauses share the watch/reason id space with user clauses at an
  // offset no realistic database reaches.
  static constexpr int kLearnedBase = 1 << 30;

  enum : int8_t { kUndef = 0, kTrue = 1, kFalse = 2 };
  int8_t value_of(int lit) const {
    const int8_t v = values_[std::abs(lit)];
    if (v == kUndef) return kUndef;
    return (lit > 0) == (v == kTrue) ? kTrue : kFalse;
  }
  std::vector<int>& clause_ref(int id) {
    return id >= kLearnedBase ? learned_[id - kLearnedBase] : clauses_[id];
  }

  int decision_level() const { return static_cast<int>(trail_lim_.size()); }
  bool enqueue(int lit, int reason);  // false when lit is already false
  int propagate();                    // conflicting clause id, or -1
  void undo_to(std::size_t trail_size);
  void analyze(int conflict_id, std::vector<int>& learnt, int& backjump_level);
  int attach_learned(std::vector<int> lits);
  void collect_learned();

  int num_vars_ = 0;
  bool has_empty_ = false;
  std::vector<std::vector<int>> clauses_;    // user clauses only
  std::vector<std::vector<int>> learned_;
  std::vector<int> root_units_;              // size-1 clauses + learned units
  std::vector<std::vector<int>> watches_;    // literal index -> clause ids
  std::vector<int8_t> values_;               // 1-based variable assignment
  std::vector<int> reason_;                  // clause id that forced the var
  std::vector<int> level_;                   // decision level of the var
  std::vector<char> seen_;                   // conflict-analysis scratch
  std::vector<int> trail_;
  std::vector<std::size_t> trail_lim_;       // trail size at each level start
  std::size_t qhead_ = 0;
  uint64_t solves_ = 0;
};

// Raised by checkers when the run's time budget is exhausted. Checked between
// constraint checks only, so a check in flight is never aborted.
class BudgetExhausted : public std::exception {
 public:
  const char* what() const noexcept override { return "time budget exhausted"; }
};

// Satisfiability queries on subsets of one constraint set. Implementations
// count their checks; the counters feed reports and budget tests.
class ConstraintChecker {
 public:
  virtual ~ConstraintChecker() = default;
  virtual bool is_satisfiable(const Node& node) = 0;
  virtual uint64_t checks() const = 0;
};

// The constraint-solver role: one engine loaded once with every clause c_i
// extended by a fresh selector s_i (stored as ¬s_i ∨ c_i), so that checking a
// subset N is a single solve under assumptions {s_i : c_i ∈ N}. Unselected
// clauses are switched off by leaving their selectors free.
class SubsetSolver final : public ConstraintChecker {
 public:
  explicit SubsetSolver(const ConstraintSet& cs);

  // One engine solve per call; throws BudgetExhausted first if a deadline is
  // set and already passed.
  bool is_satisfiable(const Node& node) override;
  uint64_t checks() const override { return checks_; }

  void set_deadline(std::chrono::steady_clock::time_point deadline) {
    deadline_ = deadline;
  }
  void clear_deadline() { deadline_.reset(); }

  const ConstraintSet& constraints() const { return *cs_; }

 private:
  const ConstraintSet* cs_;
  SatEngine engine_;
  uint64_t checks_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace musen
