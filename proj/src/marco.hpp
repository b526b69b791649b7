#pragma once

#include "enumerator.hpp"

namespace musen {

// Baseline enumerator in the style of MARCO's optimized variant: every
// iteration takes a strictly maximal unexplored node and spends exactly one
// constraint check on it. A satisfiable maximal node is already an MSS
// (every proper superset must sit in some blocked up-cone) and only its
// subsets are blocked — supersets may still contain MUSes. An unsatisfiable
// one is shrunk to a MUS, whose supersets are blocked. All results are
// certified online; there is no second phase. Honors cfg.time_budget, and
// the sink/report contracts of enumerate(); strategy, gates, mode and
// chain-order settings do not apply.
RunReport marco_enumerate(const ConstraintSet& cs, const RunConfig& cfg,
                          const EventSink& sink = {});

}  // namespace musen
