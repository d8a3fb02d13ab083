#pragma once

// Decision solver parameterized by k = |E| - |V| + |T|, the number of edges
// any feasible solution deletes. While k > 0 some non-sink has out-degree
// at least 2; the maximum-out-degree vertex has its out-edges split into
// two halves and each branch deletes one half. At k = 0 every non-sink has
// out-degree exactly 1 and the induced assignment is checked directly. A
// branch in which a non-sink loses its last out-edge is infeasible, which
// also keeps "only sinks have out-degree 0" invariant throughout.

#include <algorithm>

#include "rd/core.hpp"
#include "rd/stats.hpp"

namespace rd {

struct EdgesConfig {
  std::uint64_t node_budget = 50'000'000;
};

// k = |E| - |V| + |T| of the self-loop-free graph.
inline int edge_parameter(const DelegationGraph& g) {
  int m = 0;
  int t = 0;
  for (VertexId v : g.vertex_ids()) {
    int out = g.out_degree(v) - (g.has_edge(v, v) ? 1 : 0);
    m += out;
    if (out == 0) ++t;
  }
  return m - g.n() + t;
}

namespace edges_detail {

struct Ctx {
  Weight lambda;
  std::set<VertexId> sinks;  // sinks of the self-loop-free input
  const EdgesConfig& cfg;
  SolverStats stats;
};

inline std::optional<DelegationSolution> search(Ctx& ctx,
                                                const DelegationGraph& g) {
  if (++ctx.stats.nodes_explored > ctx.cfg.node_budget)
    throw BudgetExceeded("edges solver exceeded node budget");

  for (VertexId v : g.sinks())
    if (!ctx.sinks.count(v)) return std::nullopt;  // lost its last out-edge

  const int k = g.m() - g.n() + (int)ctx.sinks.size();
  if (k <= 0) {
    ++ctx.stats.leaf_enumerations;
    DelegationSolution sol;
    for (VertexId v : g.non_sinks()) sol.choice[v] = *g.out_neighbors(v).begin();
    std::map<VertexId, Weight> loads;
    try {
      loads = detail::partial_loads(g, sol.choice);
    } catch (const CycleError&) {
      return std::nullopt;
    }
    for (const auto& [_, l] : loads)
      if (l > ctx.lambda) return std::nullopt;
    return sol;
  }

  ctx.stats.count("branch-halve");
  int widest = 0, max_out = 0;
  for (VertexId v : g.non_sinks())
    if (g.out_degree(v) > max_out) {
      max_out = g.out_degree(v);
      widest = v;
    }
  const std::vector<VertexId> outs(g.out_neighbors(widest).begin(),
                                   g.out_neighbors(widest).end());
  const std::size_t half = outs.size() / 2;
  // child 1 keeps the first half, child 2 the rest
  {
    DelegationGraph child = g;
    for (std::size_t i = half; i < outs.size(); ++i)
      child.remove_edge(widest, outs[i]);
    if (auto sol = search(ctx, child)) return sol;
  }
  {
    DelegationGraph child = g;
    for (std::size_t i = 0; i < half; ++i) child.remove_edge(widest, outs[i]);
    if (auto sol = search(ctx, child)) return sol;
  }
  return std::nullopt;
}

}  // namespace edges_detail

inline DecideOutcome solve_edges(const Instance& inst,
                                 const EdgesConfig& cfg = {}) {
  DelegationGraph g = inst.graph;
  const auto raw_sinks = g.sinks();
  for (VertexId v : g.vertex_ids())
    if (g.has_edge(v, v)) g.remove_edge(v, v);

  edges_detail::Ctx ctx{inst.lambda, {}, cfg, {}};
  for (VertexId t : g.sinks()) ctx.sinks.insert(t);
  // a vertex whose only out-edge was a self-loop can never resolve
  for (VertexId t : g.sinks())
    if (!std::count(raw_sinks.begin(), raw_sinks.end(), t)) {
      ++ctx.stats.nodes_explored;
      return {std::nullopt, std::move(ctx.stats)};
    }

  auto sol = edges_detail::search(ctx, g);
  return {std::move(sol), std::move(ctx.stats)};
}

}  // namespace rd
