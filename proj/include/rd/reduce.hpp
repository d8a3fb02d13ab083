#pragma once

// Preprocessing rules for delegation graphs and the trace machinery that
// lifts a solution of the reduced graph back onto the original instance.
//
// Three rules are applied, always in this order:
//   1. contract_forced: a non-sink with a single out-edge (to another
//      vertex) has no choice; fold it into its target.
//   2. strip_self_loops: a self-loop can never be chosen.
//   3. defer_sources: a source (in-degree 0) whose out-degree exceeds
//      2(k-1), k = current non-sink count, can be assigned after everyone
//      else; delete it now and re-insert it during lift.
//
// Rule 3 is only a heuristic once vertices carry merged weights, so lift
// re-checks every deferred assignment and reports a lift failure instead of
// emitting an overloaded witness; solvers then branch on the failed vertex.

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

#include "rd/core.hpp"

namespace rd {

struct Contract {
  VertexId deleted;
  VertexId into;
};
struct SelfLoopRemoved {
  VertexId v;
};
struct Deferred {
  VertexId v;
  Weight weight;                      // merged weight at deletion time
  std::set<VertexId> sink_neighbors;  // sinks v could still delegate to
};
using ReductionEvent = std::variant<Contract, SelfLoopRemoved, Deferred>;

struct ReductionTrace {
  std::vector<ReductionEvent> events;
  bool empty() const { return events.empty(); }
};

namespace reduce_detail {

// Contracts v into u: u inherits v's weight and in-edges (duplicates
// collapse; the edge (u,v) turns into a self-loop on u).
inline void contract_into(DelegationGraph& g, VertexId v, VertexId u) {
  g.set_weight(u, g.weight(u) + g.weight(v));
  std::vector<VertexId> preds(g.in_neighbors(v).begin(),
                              g.in_neighbors(v).end());
  g.remove_vertex(v);
  for (VertexId x : preds) g.add_edge(x, u);
}

}  // namespace reduce_detail

// Rule 1, exhaustively, smallest qualifying id first. Appends to trace and
// returns the number of contractions performed.
inline int contract_forced_inplace(DelegationGraph& g, ReductionTrace& trace) {
  int applied = 0;
  for (;;) {
    VertexId v = 0, u = 0;
    bool found = false;
    for (VertexId cand : g.vertex_ids()) {
      const auto& out = g.out_neighbors(cand);
      if (out.size() == 1 && *out.begin() != cand) {
        v = cand;
        u = *out.begin();
        found = true;
        break;
      }
    }
    if (!found) return applied;
    trace.events.push_back(Contract{v, u});
    reduce_detail::contract_into(g, v, u);
    ++applied;
  }
}

// Rule 2. Appends to trace; returns the number of loops removed.
inline int strip_self_loops_inplace(DelegationGraph& g,
                                    ReductionTrace& trace) {
  int applied = 0;
  for (VertexId v : g.vertex_ids()) {
    if (g.has_edge(v, v)) {
      g.remove_edge(v, v);
      trace.events.push_back(SelfLoopRemoved{v});
      ++applied;
    }
  }
  return applied;
}

// Rule 3, exhaustively; the threshold 2(k-1) is re-evaluated after every
// deletion. Vertices in `blocked` are skipped (solver fallback support).
inline int defer_sources_inplace(DelegationGraph& g, ReductionTrace& trace,
                                 const std::set<VertexId>& blocked = {}) {
  int applied = 0;
  for (;;) {
    const int k = g.non_sink_count();
    VertexId v = 0;
    bool found = false;
    for (VertexId cand : g.non_sinks()) {
      if (blocked.count(cand)) continue;
      if (g.in_degree(cand) == 0 && g.out_degree(cand) > 2 * (k - 1)) {
        v = cand;
        found = true;
        break;
      }
    }
    if (!found) return applied;
    Deferred ev{v, g.weight(v), {}};
    for (VertexId w : g.out_neighbors(v))
      if (g.is_sink(w)) ev.sink_neighbors.insert(w);
    trace.events.push_back(std::move(ev));
    g.remove_vertex(v);
    ++applied;
  }
}

// Pure wrappers matching the one-rule-at-a-time contracts.

inline std::pair<DelegationGraph, ReductionTrace> rd1_contract(
    DelegationGraph g) {
  ReductionTrace trace;
  contract_forced_inplace(g, trace);
  return {std::move(g), std::move(trace)};
}

inline std::pair<DelegationGraph, ReductionTrace> rd2_strip_self_loops(
    DelegationGraph g) {
  ReductionTrace trace;
  strip_self_loops_inplace(g, trace);
  return {std::move(g), std::move(trace)};
}

// `k` must equal the current number of non-sinks.
inline std::pair<DelegationGraph, ReductionTrace> rd3_defer(DelegationGraph g,
                                                            int k) {
  if (k != g.non_sink_count())
    throw std::invalid_argument("k must equal the current non-sink count");
  ReductionTrace trace;
  defer_sources_inplace(g, trace);
  return {std::move(g), std::move(trace)};
}

// Rules 1 and 2 to a fixpoint (stripping a loop can expose a new forced
// contraction and vice versa).
inline std::pair<DelegationGraph, ReductionTrace> normalize(
    DelegationGraph g) {
  ReductionTrace trace;
  for (;;) {
    int changed = contract_forced_inplace(g, trace);
    changed += strip_self_loops_inplace(g, trace);
    if (changed == 0) break;
  }
  return {std::move(g), std::move(trace)};
}

// Size-based rejection: with every vertex weighing at least 1 and every
// sink tree capped at lambda, more than lambda * t vertices cannot fit.
inline bool kernel_check(const DelegationGraph& g, Weight lambda) {
  const __int128 cap = (__int128)lambda * (__int128)g.sink_count();
  return (__int128)g.n() <= cap;  // true = proceed, false = no
}

inline bool kernel_check(const Instance& inst) {
  return kernel_check(inst.graph, inst.lambda);
}

struct LiftResult {
  std::optional<DelegationSolution> solution;
  VertexId failed_vertex = 0;  // set when solution is absent
  bool ok() const { return solution.has_value(); }
};

// Replays a trace backwards over a solution of the reduced graph, producing
// a solution of the original instance.
//
// Contracted vertices re-enter delegating along one of their original
// out-edges into the blob they were merged into (the recorded target may
// have been retargeted by later contractions, so the original endpoint is
// reconstructed by replaying the merge chain). Deferred vertices re-enter
// in reverse deletion order, each taking the least-loaded recorded sink,
// ties to the smaller id; an assignment that would push a sink past lambda
// aborts with that vertex as the failure witness.
inline LiftResult lift(const ReductionTrace& trace,
                       const DelegationSolution& reduced_sol,
                       const Instance& original) {
  const DelegationGraph& g = original.graph;
  std::map<VertexId, VertexId> merged_into;
  auto find_alive = [&](VertexId x) {
    auto it = merged_into.find(x);
    while (it != merged_into.end()) {
      x = it->second;
      it = merged_into.find(x);
    }
    return x;
  };
  // Smallest original out-neighbor of v currently merged into `head`.
  auto original_target = [&](VertexId v, VertexId head) -> VertexId {
    for (VertexId w : g.out_neighbors(v))
      if (w != v && find_alive(w) == head) return w;
    throw std::logic_error("trace does not match the original graph");
  };

  std::map<VertexId, VertexId> choice;
  struct DeferPlan {
    VertexId v;
    Weight weight;
    std::map<VertexId, VertexId> sink_to_target;
  };
  std::vector<DeferPlan> defers;

  for (const ReductionEvent& ev : trace.events) {
    if (const auto* c = std::get_if<Contract>(&ev)) {
      choice[c->deleted] = original_target(c->deleted, c->into);
      merged_into[c->deleted] = c->into;
    } else if (const auto* d = std::get_if<Deferred>(&ev)) {
      DeferPlan plan{d->v, d->weight, {}};
      for (VertexId t : d->sink_neighbors)
        plan.sink_to_target[t] = original_target(d->v, t);
      defers.push_back(std::move(plan));
    }
  }

  // The reduced solution's own choices may follow retargeted edges as well;
  // map each back to an original out-edge into the same merged blob.
  for (const auto& [x, head] : reduced_sol.choice)
    choice[x] = original_target(x, head);

  for (auto it = defers.rbegin(); it != defers.rend(); ++it) {
    std::map<VertexId, Weight> loads = detail::partial_loads(g, choice);
    VertexId best = 0;
    Weight best_load = 0;
    for (const auto& [t, _] : it->sink_to_target) {
      Weight l = loads.at(t);
      if (best == 0 || l < best_load) {
        best = t;
        best_load = l;
      }
    }
    if (best == 0 || best_load + it->weight > original.lambda)
      return {std::nullopt, it->v};
    choice[it->v] = it->sink_to_target.at(best);
  }

  for (VertexId v : g.non_sinks())
    if (!choice.count(v)) return {std::nullopt, v};

  return {DelegationSolution{std::move(choice)}, 0};
}

}  // namespace rd
