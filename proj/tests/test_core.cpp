#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "rd/core.hpp"
#include "rd/gen.hpp"
#include "rd/oracle.hpp"

using namespace rd;

TEST_CASE("build_graph basics") {
  DelegationGraph g = rdtest::chain3();
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(g.sinks() == std::vector<VertexId>{3});

  DelegationGraph lone = build_unit_graph({1}, {});
  CHECK(lone.sinks() == std::vector<VertexId>{1});

  DelegationGraph dup = build_unit_graph({1, 2}, {{1, 2}, {1, 2}});
  CHECK(dup.m() == 1);
  CHECK(dup.has_edge(1, 2));
}

TEST_CASE("build_graph rejects bad input") {
  CHECK_THROWS_AS(build_unit_graph({1, 2}, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph({{1, 0}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(build_unit_graph({1, 1}, {}), std::invalid_argument);
}

TEST_CASE("self-loops count as out-edges until stripped") {
  DelegationGraph g = build_unit_graph({1}, {{1, 1}});
  CHECK(g.m() == 1);
  CHECK(g.sinks().empty());
  g.remove_edge(1, 1);
  CHECK(g.sinks() == std::vector<VertexId>{1});
}

TEST_CASE("sink_loads on forced chain") {
  DelegationGraph g = rdtest::chain3();
  DelegationSolution sol{{{1, 2}, {2, 3}}};
  SinkLoadReport r = sink_loads(g, sol);
  CHECK(r.load.at(3) == 3);
  CHECK(r.max_load == 3);
}

TEST_CASE("sink_loads splits between sinks") {
  DelegationGraph g = rdtest::fork();
  SinkLoadReport r = sink_loads(g, DelegationSolution{{{1, 2}}});
  CHECK(r.load.at(2) == 2);
  CHECK(r.load.at(3) == 1);
  CHECK(r.max_load == 2);
}

TEST_CASE("sink_loads rejects cycles") {
  DelegationGraph g = build_unit_graph({1, 2, 3}, {{1, 2}, {2, 1}, {2, 3}});
  CHECK_THROWS_AS(sink_loads(g, DelegationSolution{{{1, 2}, {2, 1}}}),
                  CycleError);
}

TEST_CASE("sink_loads enforces its preconditions") {
  DelegationGraph g = rdtest::chain3();
  CHECK_THROWS_AS(sink_loads(g, DelegationSolution{{{1, 2}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sink_loads(g, DelegationSolution{{{1, 3}, {2, 3}}}),
                  std::invalid_argument);
}

TEST_CASE("validate accepts and rejects via lambda") {
  Instance inst{rdtest::chain3(), 3};
  DelegationSolution sol{{{1, 2}, {2, 3}}};
  CHECK(validate(inst, sol).ok());

  inst.lambda = 2;
  ValidationReport bad = validate(inst, sol);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].kind == Violation::Kind::SinkOverload);
  CHECK(bad.violations[0].vertex == 3);
  CHECK(bad.violations[0].load == 3);
}

TEST_CASE("validate flags uncovered vertices") {
  Instance inst{rdtest::chain3(), 3};
  ValidationReport r = validate(inst, DelegationSolution{{{1, 2}}});
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].kind == Violation::Kind::UncoveredVertex);
  CHECK(r.violations[0].vertex == 2);
}

TEST_CASE("validate flags cycles and bad edges") {
  DelegationGraph g = build_unit_graph({1, 2, 3}, {{1, 2}, {2, 1}, {2, 3}});
  Instance inst{g, 5};
  ValidationReport cyc = validate(inst, DelegationSolution{{{1, 2}, {2, 1}}});
  REQUIRE_FALSE(cyc.ok());
  CHECK(cyc.violations[0].kind == Violation::Kind::Cycle);

  ValidationReport edge = validate(inst, DelegationSolution{{{1, 3}, {2, 3}}});
  REQUIRE_FALSE(edge.ok());
  CHECK(edge.violations[0].kind == Violation::Kind::MissingEdge);

  ValidationReport extra =
      validate(Instance{rdtest::chain3(), 3},
               DelegationSolution{{{1, 2}, {2, 3}, {3, 1}}});
  REQUIRE_FALSE(extra.ok());
  CHECK(extra.violations[0].kind == Violation::Kind::UnexpectedAssignment);
}

TEST_CASE("conservation and monotonicity on random instances") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Instance inst = rdtest::random_case(seed);
    auto sol = brute_force_decide(Instance{inst.graph, inst.graph.n()});
    if (!sol) continue;  // cyclic instance without resolving assignment
    SinkLoadReport r = sink_loads(inst.graph, *sol);
    Weight sum = 0;
    for (const auto& [_, l] : r.load) sum += l;
    CHECK(sum == inst.graph.total_weight());

    // accepted at some lambda implies accepted at every larger lambda
    Instance at{inst.graph, r.max_load};
    CHECK(validate(at, *sol).ok());
    at.lambda = r.max_load + 3;
    CHECK(validate(at, *sol).ok());
    at.lambda = r.max_load - 1;
    CHECK_FALSE(validate(at, *sol).ok());
  }
}

TEST_CASE("sink_loads is deterministic") {
  Instance inst = rdtest::random_case(7);
  auto sol = brute_force_decide(Instance{inst.graph, inst.graph.n()});
  REQUIRE(sol);
  SinkLoadReport a = sink_loads(inst.graph, *sol);
  SinkLoadReport b = sink_loads(inst.graph, *sol);
  CHECK(a.load == b.load);
  CHECK(a.max_load == b.max_load);
}
