#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "rd/fractional.hpp"
#include "rd/oracle.hpp"

using namespace rd;

TEST_CASE("feasibility at the split point") {
  DelegationGraph g = rdtest::fork();
  auto sol = fractional_feasible(g, Rational(3, 2));
  REQUIRE(sol);
  CHECK(sol->flow.at({1, 2}) == Rational(1, 2));
  CHECK(sol->flow.at({1, 3}) == Rational(1, 2));
  CHECK(sol->conservation_residual(g, 1) == Rational(0));

  CHECK_FALSE(fractional_feasible(g, Rational(4, 3)));
}

TEST_CASE("forced chain flows") {
  DelegationGraph g = rdtest::chain3();
  auto sol = fractional_feasible(g, Rational(3));
  REQUIRE(sol);
  CHECK(sol->flow.at({1, 2}) == Rational(1));
  CHECK(sol->flow.at({2, 3}) == Rational(2));
}

TEST_CASE("optimize on the textbook cases") {
  auto forked = fractional_optimize(rdtest::fork());
  REQUIRE(forked);
  CHECK(forked->z_star == Rational(3, 2));

  auto chain = fractional_optimize(rdtest::chain3());
  REQUIRE(chain);
  CHECK(chain->z_star == Rational(3));

  // two delegators, two sinks, complete: perfectly balanced
  DelegationGraph both =
      build_unit_graph({1, 2, 3, 4}, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  auto balanced = fractional_optimize(both);
  REQUIRE(balanced);
  CHECK(balanced->z_star == Rational(2));

  CHECK_FALSE(fractional_optimize(rdtest::two_cycle()));
}

TEST_CASE("feasibility is monotone in z") {
  for (std::uint64_t seed = 6000; seed < 6030; ++seed) {
    Instance inst = rdtest::random_case(seed);
    auto opt = fractional_optimize(inst.graph);
    if (!opt) continue;
    CHECK(fractional_feasible(inst.graph, opt->z_star + Rational(1, 7)));
    Rational below = opt->z_star - Rational(1, 997);
    CHECK_FALSE(fractional_feasible(inst.graph, below));
  }
}

TEST_CASE("fractional optimum against the integral optimum") {
  for (std::uint64_t seed = 7000; seed < 7150; ++seed) {
    Instance inst = rdtest::random_case(seed);
    auto frac = fractional_optimize(inst.graph);
    auto integral = brute_force_optimize(inst.graph);
    INFO("seed " << seed);
    CHECK(frac.has_value() == integral.has_value());
    if (!frac || !integral) continue;
    CHECK(frac->z_star <= Rational(integral->lambda_star));
    CHECK(frac->z_star.den() <= inst.graph.sink_count());

    // exact conservation at every non-sink, loads within z at every sink
    for (VertexId s : inst.graph.non_sinks())
      CHECK(frac->solution.conservation_residual(inst.graph, s) ==
            Rational(0));
    for (VertexId t : inst.graph.sinks())
      CHECK(frac->solution.sink_load(inst.graph, t) <= frac->z_star);
    for (const auto& [edge, f] : frac->solution.flow) {
      CHECK(inst.graph.has_edge(edge.first, edge.second));
      CHECK(f >= Rational(0));
    }
  }
}

TEST_CASE("weighted graphs keep exactness") {
  DelegationGraph g;
  g.add_vertex(1, 5);
  g.add_vertex(2, 2);  // sink
  g.add_vertex(3, 1);  // sink
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  // balance point: loads equal at (2 + x) = (1 + 5 - x) -> x = 2, z = 4
  auto opt = fractional_optimize(g);
  REQUIRE(opt);
  CHECK(opt->z_star == Rational(4));
  CHECK(opt->solution.flow.at({1, 2}) == Rational(2));
  CHECK(opt->solution.flow.at({1, 3}) == Rational(3));
}
