#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "rd/edges.hpp"
#include "rd/nonsink.hpp"
#include "rd/oracle.hpp"

using namespace rd;

TEST_CASE("edge parameter arithmetic") {
  CHECK(edge_parameter(rdtest::fork()) == 1);    // 2 - 3 + 2
  CHECK(edge_parameter(rdtest::chain3()) == 0);  // 2 - 3 + 1
  DelegationGraph g = build_unit_graph({1, 2, 3}, {{1, 2}, {2, 1}, {2, 3}});
  CHECK(edge_parameter(g) == 1);  // 3 - 3 + 1

  // self-loops are ignored, and a loop-only vertex counts as a sink here
  DelegationGraph loops = build_unit_graph({1, 2}, {{1, 1}, {1, 2}});
  CHECK(edge_parameter(loops) == 0);  // 1 - 2 + 1
}

TEST_CASE("single split decides the fork") {
  DecideOutcome out = solve_edges(Instance{rdtest::fork(), 2});
  REQUIRE(out.yes());
  CHECK(validate(Instance{rdtest::fork(), 2}, *out.solution).ok());
  // root plus the first forced leaf; the second leaf is never needed
  CHECK(out.stats.nodes_explored == 2);

  // at cap 1 both leaves fail and the whole tree is walked
  DecideOutcome no = solve_edges(Instance{rdtest::fork(), 1});
  CHECK_FALSE(no.yes());
  CHECK(no.stats.nodes_explored == 3);
}

TEST_CASE("parameter zero is answered at the root") {
  DecideOutcome out = solve_edges(Instance{rdtest::chain3(), 3});
  REQUIRE(out.yes());
  CHECK(out.stats.nodes_explored == 1);
  CHECK(out.solution->choice ==
        std::map<VertexId, VertexId>{{1, 2}, {2, 3}});
}

TEST_CASE("sinkless cycle is infeasible") {
  DecideOutcome out = solve_edges(Instance{rdtest::two_cycle(), 5});
  CHECK_FALSE(out.yes());
  CHECK(out.stats.nodes_explored == 1);
}

TEST_CASE("self-loop-only vertices make the instance infeasible") {
  DelegationGraph g = build_unit_graph({1, 2, 3}, {{1, 1}, {2, 1}, {2, 3}});
  DecideOutcome out = solve_edges(Instance{g, 5});
  CHECK_FALSE(out.yes());
  CHECK_FALSE(brute_force_decide(Instance{g, 5}).has_value());
}

TEST_CASE("edge-solver node budget is enforced") {
  DelegationGraph g;
  for (VertexId v = 1; v <= 9; ++v) g.add_vertex(v);
  for (VertexId u = 1; u <= 3; ++u)
    for (VertexId t = 4; t <= 9; ++t) g.add_edge(u, t);
  CHECK_THROWS_AS(solve_edges(Instance{g, 1}, EdgesConfig{3}),
                  BudgetExceeded);
}

TEST_CASE("node count respects the search-tree bound") {
  for (std::uint64_t seed = 4000; seed < 4200; ++seed) {
    Instance inst = rdtest::random_case(seed);
    const int k = edge_parameter(inst.graph);
    DecideOutcome out = solve_edges(inst);
    INFO("seed " << seed << " k " << k);
    CHECK(out.stats.nodes_explored <= (1ull << (k + 1)) - 1);
  }
}

TEST_CASE("edge solver matches the oracle on random instances") {
  for (std::uint64_t seed = 5000; seed < 5400; ++seed) {
    Instance inst = rdtest::random_case(seed);
    bool expected = brute_force_decide(inst).has_value();
    DecideOutcome out = solve_edges(inst);
    INFO("seed " << seed);
    CHECK(out.yes() == expected);
    if (out.yes()) CHECK(validate(inst, *out.solution).ok());
  }
}

TEST_CASE("both solvers agree on weighted instances") {
  for (std::uint64_t seed = 6000; seed < 6100; ++seed) {
    Instance inst = rdtest::random_case(seed);
    DelegationGraph weighted = inst.graph;
    SplitMix64 rng(seed ^ 0xabcdef);
    for (VertexId v : weighted.vertex_ids())
      weighted.set_weight(v, 1 + (Weight)rng.below(3));
    Instance winst{weighted,
                   (Weight)(1 + (int)rng.below(
                       (std::uint64_t)weighted.total_weight()))};
    DecideOutcome a = solve_edges(winst);
    DecideOutcome b = solve_nonsink(winst);
    CHECK(a.yes() == b.yes());
    if (a.yes()) CHECK(validate(winst, *a.solution).ok());
    if (b.yes()) CHECK(validate(winst, *b.solution).ok());
  }
}
