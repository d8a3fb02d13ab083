#pragma once

// Shared fixtures for the test suites.

#include "rd/core.hpp"
#include "rd/gen.hpp"

namespace rdtest {

// 1 -> 2 -> 3, unit weights; sink is 3.
inline rd::DelegationGraph chain3() {
  return rd::build_unit_graph({1, 2, 3}, {{1, 2}, {2, 3}});
}

// 1 -> 2 and 1 -> 3; sinks are 2 and 3.
inline rd::DelegationGraph fork() {
  return rd::build_unit_graph({1, 2, 3}, {{1, 2}, {1, 3}});
}

// 1 <-> 2 with no sink anywhere.
inline rd::DelegationGraph two_cycle() {
  return rd::build_unit_graph({1, 2}, {{1, 2}, {2, 1}});
}

// Mixed bag of small random instances for cross-checking solvers.
inline rd::Instance random_case(std::uint64_t seed) {
  rd::SplitMix64 rng(seed);
  const int n = 2 + (int)rng.below(9);          // up to 10 vertices
  const int t = 1 + (int)rng.below((std::uint64_t)n);
  const double probs[] = {0.1, 0.2, 0.3};       // keeps |E|-|V|+|T| small
  const double p = probs[rng.below(3)];
  const bool cyclic = rng.below(2) == 0;
  return rd::random_instance(n, t, p, cyclic, rd::LambdaMode::sampled(),
                             rng.next());
}

}  // namespace rdtest
