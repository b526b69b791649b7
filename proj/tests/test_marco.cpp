#include <algorithm>
#include <chrono>
#include <thread>
#include <vector>

#include "doctest.h"
#include "marco.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace musen;
using musen::test::node_of;

TEST_CASE("baseline finds the exact result sets on the running example") {
  const ConstraintSet cs = test::example1();
  const RunReport report = marco_enumerate(cs, RunConfig{});
  CHECK(report.completed);
  CHECK(report.final_mus ==
        std::vector<Node>{node_of("1011"), node_of("1100")});
  CHECK(report.final_mss ==
        std::vector<Node>{node_of("0111"), node_of("1001"), node_of("1010")});
  CHECK(report.final_mcs ==
        std::vector<Node>{node_of("0101"), node_of("0110"), node_of("1000")});
}

TEST_CASE("every result is emitted online and exactly once") {
  const ConstraintSet cs = test::example1();
  const RunReport report = marco_enumerate(cs, RunConfig{});
  CHECK(report.events.size() == 5);
  std::vector<Node> seen;
  for (const EnumerationEvent& ev : report.events) {
    CHECK(ev.phase == Phase::online);
    CHECK(std::find(seen.begin(), seen.end(), ev.node) == seen.end());
    seen.push_back(ev.node);
  }
  CHECK(report.iterations == report.events.size());
}

TEST_CASE("first probe is the full universe and costs one check") {
  // The first maximal unexplored superset of {} is the whole set, which is
  // unsatisfiable here, so the first yield is a MUS obtained by shrinking.
  const ConstraintSet cs = test::example1();
  const RunReport report = marco_enumerate(cs, RunConfig{});
  REQUIRE(!report.events.empty());
  CHECK(report.events[0].kind == ResultKind::mus);
  CHECK(report.events[0].node == node_of("1011"));
}

TEST_CASE("check accounting: one probe per iteration plus shrink work") {
  const ConstraintSet cs = test::example1();
  const RunReport report = marco_enumerate(cs, RunConfig{});
  std::size_t n_mus = 0;
  for (const EnumerationEvent& ev : report.events)
    if (ev.kind == ResultKind::mus) ++n_mus;
  // Each iteration spends one probe; each MUS additionally spends one check
  // per member of the shrink seed. The total therefore exceeds the
  // iteration count exactly when a MUS was found.
  CHECK(report.constraint_checks >= report.iterations);
  if (n_mus > 0) CHECK(report.constraint_checks > report.iterations);
}

TEST_CASE("baseline agrees with the oracle on random instances") {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    const int n_vars = 3 + static_cast<int>(seed % 4);
    const ConstraintSet cs = random_cnf(n_vars, 8, 3, seed * 31);
    const OracleResult truth = brute_force(cs);
    const RunReport report = marco_enumerate(cs, RunConfig{});
    CHECK(report.completed);
    CHECK(report.final_mus == truth.mus);
    CHECK(report.final_mss == truth.mss);
    CHECK(report.final_mcs == truth.mcs);
  }
}

TEST_CASE("baseline and chain enumeration produce identical final sets") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    const ConstraintSet cs = random_cnf(4, 7, 3, seed * 101);
    const RunReport left = marco_enumerate(cs, RunConfig{});
    RunConfig cfg;
    cfg.gates.shrink_factor = 0.2;
    cfg.gates.grow_factor = 0.8;
    cfg.strategy = Strategy::pivot;
    cfg.rng_seed = seed;
    const RunReport right = enumerate(cs, cfg);
    REQUIRE(left.completed);
    REQUIRE(right.completed);
    CHECK(left.final_mus == right.final_mus);
    CHECK(left.final_mss == right.final_mss);
  }
}

TEST_CASE("zero-constraint set yields the empty MSS") {
  const ConstraintSet cs = parse_dimacs(std::string("p cnf 0 0\n")).set;
  const RunReport report = marco_enumerate(cs, RunConfig{});
  CHECK(report.completed);
  CHECK(report.final_mus.empty());
  REQUIRE(report.final_mss.size() == 1);
  CHECK(report.final_mss[0] == Node(0));
}

TEST_CASE("budget exhaustion yields a certified partial answer") {
  const ConstraintSet cs = test::example1();
  RunConfig cfg;
  cfg.time_budget = std::chrono::milliseconds(20);
  bool slept = false;
  const RunReport report =
      marco_enumerate(cs, cfg, [&](const EnumerationEvent&) {
        if (!slept) {
          std::this_thread::sleep_for(std::chrono::milliseconds(60));
          slept = true;
        }
      });
  CHECK(!report.completed);
  CHECK(!report.events.empty());
  const OracleResult truth = brute_force(cs);
  for (const Node& m : report.final_mus)
    CHECK(std::find(truth.mus.begin(), truth.mus.end(), m) != truth.mus.end());
  for (const Node& m : report.final_mss)
    CHECK(std::find(truth.mss.begin(), truth.mss.end(), m) != truth.mss.end());
}
