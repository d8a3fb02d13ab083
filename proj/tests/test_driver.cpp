#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "rd/driver.hpp"

using namespace rd;

TEST_CASE("optimization agrees across algorithms") {
  for (Algo algo : {Algo::Oracle, Algo::Nonsink, Algo::Edges, Algo::Auto}) {
    auto chain = optimize_driver(rdtest::chain3(), algo);
    REQUIRE(chain);
    CHECK(chain->lambda_star == 3);
    CHECK(validate(Instance{rdtest::chain3(), 3}, chain->solution).ok());

    auto forked = optimize_driver(rdtest::fork(), algo);
    REQUIRE(forked);
    CHECK(forked->lambda_star == 2);

    CHECK_FALSE(optimize_driver(rdtest::two_cycle(), algo));
  }
}

TEST_CASE("optimum matches the oracle on random instances") {
  for (std::uint64_t seed = 8000; seed < 8060; ++seed) {
    Instance inst = rdtest::random_case(seed);
    auto expected = brute_force_optimize(inst.graph);
    for (Algo algo : {Algo::Nonsink, Algo::Edges}) {
      auto got = optimize_driver(inst.graph, algo);
      INFO("seed " << seed);
      CHECK(got.has_value() == expected.has_value());
      if (got && expected) {
        CHECK(got->lambda_star == expected->lambda_star);
        CHECK(validate(Instance{inst.graph, got->lambda_star}, got->solution)
                  .ok());
      }
    }
  }
}

TEST_CASE("auto picks the edges solver for sparse graphs") {
  SolverConfigs cfg;
  CHECK(resolve_auto(rdtest::chain3(), cfg) == Algo::Edges);

  // dense enough to push the edge parameter over the limit
  DelegationGraph dense;
  for (VertexId v = 1; v <= 12; ++v) dense.add_vertex(v);
  for (VertexId u = 1; u <= 8; ++u)
    for (VertexId v = 1; v <= 12; ++v)
      if (u != v) dense.add_edge(u, v);
  CHECK(edge_parameter(dense) > cfg.auto_edge_parameter_limit);
  CHECK(resolve_auto(dense, cfg) == Algo::Nonsink);

  DelegationGraph wide;
  for (VertexId v = 1; v <= 80; ++v) wide.add_vertex(v);
  for (VertexId u = 1; u <= 40; ++u)
    for (VertexId v = 41; v <= 80; ++v) wide.add_edge(u, v);
  CHECK(resolve_auto(wide, cfg) == Algo::Oracle);
}

TEST_CASE("empty graph optimizes to zero") {
  auto out = optimize_driver(DelegationGraph{}, Algo::Auto);
  REQUIRE(out);
  CHECK(out->lambda_star == 0);
  CHECK(out->solution.choice.empty());
}
