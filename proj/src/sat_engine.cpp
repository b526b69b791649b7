#include "sat_engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace musen {

void SatEngine::ensure_vars(int upto) {
  if (upto <= num_vars_) return;
  num_vars_ = upto;
  watches_.resize(2 * static_cast<std::size_t>(num_vars_));
}

void SatEngine::add_clause(std::vector<int> lits) {
  for (int lit : lits) {
    if (lit == 0) throw std::invalid_argument("literal 0 in clause");
    ensure_vars(std::abs(lit));
  }
  if (lits.empty()) {
    has_empty_ = true;
    clauses_.push_back(std::move(lits));
    return;
  }
  const int id = static_cast<int>(clauses_.size());
  clauses_.push_back(std::move(lits));
  const std::vector<int>& c = clauses_.back();
  if (c.size() == 1) {
    root_units_.push_back(c[0]);
  } else {
    watches_[lit_index(c[0])].push_back(id);
    watches_[lit_index(c[1])].push_back(id);
  }
}

bool SatEngine::enqueue(int lit, int reason) {
  const int8_t v = value_of(lit);
  if (v == kTrue) return true;
  if (v == kFalse) return false;
  const int var = std::abs(lit);
  values_[var] = lit > 0 ? kTrue : kFalse;
  reason_[var] = reason;
  level_[var] = decision_level();
  trail_.push_back(lit);
  return true;
}

int SatEngine::propagate() {
  while (qhead_ < trail_.size()) {
    const int p = trail_[qhead_++];
    // Clauses watching ¬p just lost that watch; repair or derive units.
    std::vector<int>& ws = watches_[lit_index(-p)];
    std::size_t keep = 0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const int id = ws[i];
      std::vector<int>& c = clause_ref(id);
      if (c[0] == -p) std::swap(c[0], c[1]);
      // Now c[1] == -p. If the other watch is already true, keep watching.
      if (value_of(c[0]) == kTrue) {
        ws[keep++] = id;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value_of(c[k]) != kFalse) {
          std::swap(c[1], c[k]);
          watches_[lit_index(c[1])].push_back(id);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      // Unit or conflicting.
      ws[keep++] = id;
      if (!enqueue(c[0], id)) {
        for (++i; i < ws.size(); ++i) ws[keep++] = ws[i];
        ws.resize(keep);
        return id;
      }
    }
    ws.resize(keep);
  }
  return -1;
}

void SatEngine::undo_to(std::size_t trail_size) {
  while (trail_.size() > trail_size) {
    values_[std::abs(trail_.back())] = kUndef;
    trail_.pop_back();
  }
  qhead_ = trail_size;
}

// First-UIP conflict analysis. Resolves the conflicting clause against the
// reasons of current-level literals, walking the trail backwards, until a
// single literal of the current level remains; that literal's complement
// becomes the asserting literal learnt[0]. learnt[1] is the deepest of the
// remaining literals so the watch pair stays valid after the backjump.
void SatEngine::analyze(int conflict_id, std::vector<int>& learnt,
                        int& backjump_level) {
  learnt.assign(1, 0);
  const int current = decision_level();
  int open = 0;  // current-level literals not yet resolved away
  int p = 0;
  std::size_t index = trail_.size();
  std::vector<int> touched;

  for (;;) {
    for (int q : clause_ref(conflict_id)) {
      if (q == p) continue;  // the literal this reason clause propagated
      const int v = std::abs(q);
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      touched.push_back(v);
      if (level_[v] >= current) {
        ++open;
      } else {
        learnt.push_back(q);
      }
    }
    do {
      --index;
    } while (!seen_[std::abs(trail_[index])]);
    p = trail_[index];
    seen_[std::abs(p)] = 0;
    if (--open == 0) break;
    conflict_id = reason_[std::abs(p)];
  }
  learnt[0] = -p;

  backjump_level = 0;
  std::size_t deepest = 1;
  for (std::size_t i = 1; i < learnt.size(); ++i) {
    const int lv = level_[std::abs(learnt[i])];
    if (lv > backjump_level) {
      backjump_level = lv;
      deepest = i;
    }
  }
  if (learnt.size() > 1) std::swap(learnt[1], learnt[deepest]);
  for (int v : touched) seen_[v] = 0;
}

int SatEngine::attach_learned(std::vector<int> lits) {
  const int id = kLearnedBase + static_cast<int>(learned_.size());
  watches_[lit_index(lits[0])].push_back(id);
  watches_[lit_index(lits[1])].push_back(id);
  learned_.push_back(std::move(lits));
  return id;
}

// Drop the longest learned clauses once the store outgrows the user database.
// Runs only between solves, when no assignment is active, so watch lists can
// be rebuilt from scratch and stale reasons are never dereferenced.
void SatEngine::collect_learned() {
  const std::size_t cap = 1024 + 2 * clauses_.size();
  if (learned_.size() <= cap) return;
  const std::size_t keep_n = 512 + clauses_.size();
  std::vector<std::size_t> order(learned_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return learned_[a].size() < learned_[b].size();
                   });
  std::vector<char> keep(learned_.size(), 0);
  for (std::size_t i = 0; i < keep_n && i < order.size(); ++i) keep[order[i]] = 1;
  std::vector<std::vector<int>> kept;
  kept.reserve(keep_n);
  for (std::size_t i = 0; i < learned_.size(); ++i)
    if (keep[i]) kept.push_back(std::move(learned_[i]));
  learned_ = std::move(kept);

  for (auto& ws : watches_) ws.clear();
  for (std::size_t id = 0; id < clauses_.size(); ++id) {
    const std::vector<int>& c = clauses_[id];
    if (c.size() < 2) continue;
    watches_[lit_index(c[0])].push_back(static_cast<int>(id));
    watches_[lit_index(c[1])].push_back(static_cast<int>(id));
  }
  for (std::size_t i = 0; i < learned_.size(); ++i) {
    const std::vector<int>& c = learned_[i];
    watches_[lit_index(c[0])].push_back(kLearnedBase + static_cast<int>(i));
    watches_[lit_index(c[1])].push_back(kLearnedBase + static_cast<int>(i));
  }
}

SolveResult SatEngine::solve(const SolveRequest& req) {
  ++solves_;
  for (int lit : req.assumptions) ensure_vars(std::abs(lit));
  for (int lit : req.frozen) ensure_vars(std::abs(lit));

  SolveResult res;
  if (has_empty_) return res;

  collect_learned();

  const std::size_t slots = static_cast<std::size_t>(num_vars_) + 1;
  values_.assign(slots, kUndef);
  reason_.assign(slots, -1);
  level_.assign(slots, 0);
  seen_.assign(slots, 0);
  trail_.clear();
  trail_lim_.clear();
  qhead_ = 0;

  for (int lit : root_units_)
    if (!enqueue(lit, -1)) return res;

  // Frozen and assumption literals are placed as decisions, each on its own
  // level, so conflict analysis never treats them as facts and every learned
  // clause remains valid for later calls with different request literals.
  std::vector<int> assume;
  assume.reserve(req.frozen.size() + req.assumptions.size());
  assume.insert(assume.end(), req.frozen.begin(), req.frozen.end());
  assume.insert(assume.end(), req.assumptions.begin(), req.assumptions.end());
  std::vector<int> handled_level;  // level at which assume[i] was secured
  std::size_t next_assume = 0;

  std::vector<int> learnt;
  for (;;) {
    const int conflict = propagate();
    if (conflict != -1) {
      if (decision_level() == 0) return res;  // refuted outright
      int backjump = 0;
      analyze(conflict, learnt, backjump);
      undo_to(trail_lim_[static_cast<std::size_t>(backjump)]);
      trail_lim_.resize(static_cast<std::size_t>(backjump));
      while (next_assume > 0 && handled_level[next_assume - 1] > backjump)
        --next_assume;
      handled_level.resize(next_assume);
      if (learnt.size() == 1) {
        // Globally implied unit: keep it for every later call.
        root_units_.push_back(learnt[0]);
        if (!enqueue(learnt[0], -1)) return res;
      } else {
        const int id = attach_learned(learnt);
        if (!enqueue(learnt[0], id))
          throw std::logic_error("asserting literal not enqueueable");
      }
      continue;
    }
    if (next_assume < assume.size()) {
      const int lit = assume[next_assume];
      const int8_t v = value_of(lit);
      if (v == kFalse) return res;  // clashes with clauses or earlier literals
      if (v == kUndef) {
        trail_lim_.push_back(trail_.size());
        enqueue(lit, -1);
      }
      handled_level.push_back(decision_level());
      ++next_assume;
      continue;
    }
    int var = 0;
    for (int v = 1; v <= num_vars_; ++v) {
      if (values_[v] == kUndef) {
        var = v;
        break;
      }
    }
    if (var == 0) {
      res.status = SolveStatus::sat;
      res.values.assign(slots, 0);
      for (int v = 1; v <= num_vars_; ++v) res.values[v] = values_[v] == kTrue;
      return res;
    }
    trail_lim_.push_back(trail_.size());
    enqueue(req.polarity == Polarity::prefer_true ? var : -var, -1);
  }
}

SubsetSolver::SubsetSolver(const ConstraintSet& cs) : cs_(&cs) {
  const int nv = cs.num_vars();
  engine_.ensure_vars(nv + cs.size());
  for (int ci = 1; ci <= cs.size(); ++ci) {
    std::vector<int> lits;
    lits.reserve(cs.clause(ci).size() + 1);
    lits.push_back(-(nv + ci));
    lits.insert(lits.end(), cs.clause(ci).literals.begin(),
                cs.clause(ci).literals.end());
    engine_.add_clause(std::move(lits));
  }
}

bool SubsetSolver::is_satisfiable(const Node& node) {
  if (deadline_ && std::chrono::steady_clock::now() >= *deadline_)
    throw BudgetExhausted();
  ++checks_;
  SolveRequest req;
  const int nv = cs_->num_vars();
  for (int ci : node.members()) req.assumptions.push_back(nv + ci);
  return engine_.solve(req).status == SolveStatus::sat;
}

}  // namespace musen
