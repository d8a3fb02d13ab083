#pragma once

// Seeded random instance generation. The stream generator is SplitMix64 so
// that identical (parameters, seed) pairs reproduce instances bit-for-bit
// on any platform.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "rd/core.hpp"

namespace rd {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Bernoulli with probability p, decided on the top 53 bits.
  bool chance(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    const double scale = 9007199254740992.0;  // 2^53
    return (next() >> 11) < (std::uint64_t)(p * scale);
  }

 private:
  std::uint64_t state_;
};

struct LambdaMode {
  // Fixed value, or sampled uniformly from [1, n] when absent.
  std::optional<Weight> fixed;
  static LambdaMode sampled() { return {}; }
  static LambdaMode value(Weight v) { return {v}; }
};

// Random unit-weight instance on vertices 1..n. The last t ids are the
// designated sinks (they receive no out-edges). Without cycles, edges only
// run from lower to higher ids, so id order is a topological order. Every
// non-sink is guaranteed at least one out-edge. Draw order is fixed:
// candidate pairs in (u asc, v asc) order, one draw each, then the forced
// edge if needed, then lambda if sampled.
inline Instance random_instance(int n, int t, double edge_prob,
                                bool allow_cycles, LambdaMode lambda_mode,
                                std::uint64_t seed) {
  if (n < 1 || t < 1 || t > n)
    throw std::invalid_argument("need 1 <= t <= n");
  if (edge_prob < 0.0 || edge_prob > 1.0)
    throw std::invalid_argument("edge_prob must lie in [0,1]");
  if (lambda_mode.fixed && *lambda_mode.fixed < 1)
    throw std::invalid_argument("lambda must be >= 1");

  SplitMix64 rng(seed);
  DelegationGraph g;
  for (VertexId v = 1; v <= n; ++v) g.add_vertex(v);

  const VertexId first_sink = n - t + 1;
  for (VertexId u = 1; u < first_sink; ++u) {
    std::vector<VertexId> candidates;
    for (VertexId v = allow_cycles ? 1 : u + 1; v <= n; ++v) {
      if (v == u) continue;
      candidates.push_back(v);
      if (rng.chance(edge_prob)) g.add_edge(u, v);
    }
    if (g.out_degree(u) == 0) {
      if (candidates.empty())
        throw std::invalid_argument("non-sink without possible targets");
      g.add_edge(u, candidates[rng.below(candidates.size())]);
    }
  }

  Instance inst;
  inst.graph = std::move(g);
  inst.lambda = lambda_mode.fixed ? *lambda_mode.fixed
                                  : (Weight)(1 + rng.below((std::uint64_t)n));
  return inst;
}

}  // namespace rd
