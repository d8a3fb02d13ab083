#pragma once

// Exact solver for the fractional variant: votes may split across
// out-edges, weight is conserved at every non-sink, and the objective is
// the maximum sink load. Feasibility of a candidate cap z reduces to a
// max-flow problem; the optimum is found by bisection plus a snap to the
// unique rational with denominator at most |T| in the final interval (the
// feasibility boundary saturates between 1 and |T| sink arcs of a min cut,
// so the optimum has that form). All arithmetic is exact rationals.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rd/core.hpp"
#include "rd/maxflow.hpp"
#include "rd/rational.hpp"

namespace rd {

struct FractionalSolution {
  std::map<std::pair<VertexId, VertexId>, Rational> flow;  // per edge
  Rational objective;  // max sink load actually allowed (z)

  // inflow + own weight - outflow at a non-sink; exactly zero when valid
  Rational conservation_residual(const DelegationGraph& g, VertexId s) const {
    Rational in(0), out(0);
    for (VertexId u : g.in_neighbors(s)) {
      auto it = flow.find({u, s});
      if (it != flow.end()) in += it->second;
    }
    for (VertexId v : g.out_neighbors(s)) {
      auto it = flow.find({s, v});
      if (it != flow.end()) out += it->second;
    }
    return in + Rational(g.weight(s)) - out;
  }

  Rational sink_load(const DelegationGraph& g, VertexId t) const {
    Rational in(0);
    for (VertexId u : g.in_neighbors(t)) {
      auto it = flow.find({u, t});
      if (it != flow.end()) in += it->second;
    }
    return in + Rational(g.weight(t));
  }
};

// Is a maximum sink load of z achievable? The flow network has a source
// supplying weight(s) to each non-sink s, the original edges with effectively
// unbounded capacity, and each sink t drained into a collector with capacity
// z - weight(t); z is achievable iff the whole supply routes through.
inline std::optional<FractionalSolution> fractional_feasible(
    const DelegationGraph& g, const Rational& z) {
  const std::vector<VertexId> ids = g.vertex_ids();
  std::map<VertexId, int> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = (int)i;
  const int source = (int)ids.size();
  const int collector = source + 1;

  for (VertexId t : g.sinks())
    if (z < Rational(g.weight(t))) return std::nullopt;

  MaxFlowNetwork<Rational> net(collector + 1);
  Rational supply(0);
  const Rational unbounded(g.total_weight());
  std::vector<std::pair<std::pair<VertexId, VertexId>, int>> edge_ids;
  for (VertexId v : ids) {
    if (g.is_sink(v)) {
      net.add_edge(index[v], collector, z - Rational(g.weight(v)));
    } else {
      net.add_edge(source, index[v], Rational(g.weight(v)));
      supply += Rational(g.weight(v));
    }
    for (VertexId w : g.out_neighbors(v))
      edge_ids.push_back({{v, w}, net.add_edge(index[v], index[w], unbounded)});
  }

  if (net.max_flow(source, collector) != supply) return std::nullopt;
  FractionalSolution sol;
  sol.objective = z;
  for (const auto& [edge, id] : edge_ids) {
    Rational f = net.flow_on(id);
    if (f != Rational(0)) sol.flow[edge] = f;
  }
  return sol;
}

struct FractionalOptimum {
  Rational z_star;
  FractionalSolution solution;
};

inline std::optional<FractionalOptimum> fractional_optimize(
    const DelegationGraph& g) {
  if (g.n() == 0) return FractionalOptimum{Rational(0), {}};
  const int t = g.sink_count();
  if (t == 0) return std::nullopt;  // nothing can absorb the delegations

  const Rational total(g.total_weight());
  // max load >= W/|T| (loads sum to W) and >= any single sink's own weight
  Rational lo = total / Rational(t);
  for (VertexId s : g.sinks())
    if (Rational(g.weight(s)) > lo) lo = Rational(g.weight(s));

  if (auto sol = fractional_feasible(g, lo))
    return FractionalOptimum{lo, std::move(*sol)};
  if (!fractional_feasible(g, total)) return std::nullopt;

  // Invariant: lo infeasible < z* <= hi feasible. Stop once the interval is
  // narrower than 1/|T|^2; two distinct rationals with denominator <= |T|
  // differ by at least that much, so the snap target is unique.
  Rational hi = total;
  const Rational gap(1, (long long)t * t);
  while (!(hi - lo < gap)) {
    Rational mid = (lo + hi) / Rational(2);
    if (fractional_feasible(g, mid))
      hi = mid;
    else
      lo = mid;
  }

  std::optional<Rational> snapped;
  for (long long b = 1; b <= t; ++b) {
    // smallest multiple of 1/b strictly above lo
    Rational cand((lo * Rational(b)).floor() + 1, b);
    if (cand <= hi) {
      if (snapped && *snapped != cand)
        throw std::logic_error("snap interval holds two candidates");
      snapped = cand;
    }
  }
  if (!snapped) throw std::logic_error("no rational with small denominator "
                                       "in the snap interval");
  auto sol = fractional_feasible(g, *snapped);
  if (!sol) throw std::logic_error("snapped optimum is not feasible");
  return FractionalOptimum{*snapped, std::move(*sol)};
}

}  // namespace rd
