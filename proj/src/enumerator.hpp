#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "chain.hpp"
#include "cnf.hpp"
#include "unexplored_map.hpp"

namespace musen {

// Which result kinds a run must enumerate completely. Restricted modes allow
// extra map blocking that may sacrifice results of the other kind.
enum class EnumMode { all, mus_only, mss_only };

// online results are certified the moment they are reported; phase2 results
// are emitted after the map empties, from the candidate extraction.
enum class Phase { online, phase2 };

struct EnumerationEvent {
  ResultKind kind;
  Node node;
  Phase phase = Phase::online;
  uint64_t constraint_checks = 0;  // counter snapshots at emission time
  uint64_t map_solves = 0;
  double elapsed_ms = 0.0;
};

// Called synchronously at each result; a slow sink delays the run. Must not
// block indefinitely.
using EventSink = std::function<void(const EnumerationEvent&)>;

struct RunConfig {
  Strategy strategy = Strategy::basic;
  GateConfig gates;
  EnumMode mode = EnumMode::all;
  double pivot_fix_probability = 0.5;
  uint64_t rng_seed = 0;
  // Zero means unlimited. Checked between constraint checks, never during
  // one, so overshoot is bounded by a single check.
  std::chrono::milliseconds time_budget{0};
  ChainOrder chain_order = ChainOrder::ascending_index;
  bool strict_extremes = false;
};

struct RunReport {
  std::vector<EnumerationEvent> events;
  // Final deduplicated result sets in ascending bit-string order. On
  // truncated runs these hold the online-certified results found so far.
  std::vector<Node> final_mus;
  std::vector<Node> final_mss;
  std::vector<Node> final_mcs;  // always the complements of final_mss
  uint64_t constraint_checks = 0;
  uint64_t map_solves = 0;
  uint64_t iterations = 0;
  double wall_ms = 0.0;
  bool completed = false;
};

// Candidate pools collected online. Upon completion, MUSes are exactly the
// subset-minimal members of mus_can and MSSes the subset-maximal members of
// mss_can.
struct CandidateSets {
  NodeSet mus_can;
  NodeSet mss_can;
};

// Records one determined node: inserts it into the matching candidate pool
// and adds exactly one blocking clause to the map (supersets of an
// unsatisfiable node, subsets of a satisfiable one).
void classify_and_block(const Node& node, bool satisfiable, UnexploredMap& map,
                        CandidateSets& candidates);

// The set-extremal members of the pools: {subset-minimal(mus_can),
// subset-maximal(mss_can)}, each sorted.
std::pair<std::vector<Node>, std::vector<Node>> extract_phase2(
    const CandidateSets& candidates);

std::vector<Node> subset_minimal_elements(const std::vector<Node>& nodes);
std::vector<Node> subset_maximal_elements(const std::vector<Node>& nodes);

// Online enumeration of all MUSes and MSSes of cs (per cfg.mode): repeatedly
// picks an unexplored couple, threads a chain, locates the satisfiability
// boundary by binary search, optionally shrinks/grows the boundary nodes
// (reporting certified results through sink as they appear), and blocks the
// determined cones in the map until it empties; then a second phase extracts
// and reports whatever the gates withheld. MCSes are the complements of the
// final MSSes.
RunReport enumerate(const ConstraintSet& cs, const RunConfig& cfg,
                    const EventSink& sink = {});

}  // namespace musen
