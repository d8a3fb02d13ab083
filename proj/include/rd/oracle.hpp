#pragma once

// Exhaustive reference solver. Ground truth for every other solver in the
// suite; not a performance path.

#include <optional>

#include "rd/core.hpp"

namespace rd {

struct OracleConfig {
  int max_non_sinks = 15;
};

namespace oracle_detail {

// Loads of all resolved chains under a partial assignment. Returns false if
// the chosen edges contain a cycle. Chains dangling at unassigned vertices
// contribute nothing yet, so the loads are lower bounds for any completion.
inline bool partial_loads(const DelegationGraph& g,
                          const std::map<VertexId, VertexId>& choice,
                          std::map<VertexId, Weight>& loads) {
  loads.clear();
  for (VertexId t : g.sinks()) loads[t] = g.weight(t);
  // 0 = dangling, otherwise resolved sink id
  std::map<VertexId, VertexId> memo;
  for (const auto& [start, _] : choice) {
    if (memo.count(start)) continue;
    std::vector<VertexId> path;  // assigned vertices only
    std::set<VertexId> on_path;
    VertexId cur = start;
    VertexId result = 0;
    for (;;) {
      auto hit = memo.find(cur);
      if (hit != memo.end()) {
        result = hit->second;
        break;
      }
      auto it = choice.find(cur);
      if (it == choice.end()) {
        result = g.is_sink(cur) ? cur : 0;
        break;
      }
      if (!on_path.insert(cur).second) return false;
      path.push_back(cur);
      cur = it->second;
    }
    for (VertexId v : path) memo[v] = result;
  }
  for (const auto& [v, t] : memo)
    if (t != 0) loads[t] += g.weight(v);
  return true;
}

struct Enumerator {
  const DelegationGraph& g;
  Weight lambda;
  std::vector<VertexId> order;  // non-sinks, ascending ids
  std::map<VertexId, VertexId> choice;

  explicit Enumerator(const DelegationGraph& graph, Weight l)
      : g(graph), lambda(l), order(graph.non_sinks()) {}

  // First resolving assignment with max load <= lambda, in lexicographic
  // (vertex id, chosen neighbor id) order. Pruning on partially resolved
  // loads cannot skip it: resolved loads only grow along a branch.
  bool run(std::size_t depth) {
    std::map<VertexId, Weight> loads;
    if (!partial_loads(g, choice, loads)) return false;
    for (const auto& [_, l] : loads)
      if (l > lambda) return false;
    if (depth == order.size()) return true;
    VertexId v = order[depth];
    for (VertexId w : g.out_neighbors(v)) {
      choice[v] = w;
      if (run(depth + 1)) return true;
      choice.erase(v);
    }
    return false;
  }
};

}  // namespace oracle_detail

inline std::optional<DelegationSolution> brute_force_decide(
    const Instance& inst, const OracleConfig& cfg = {}) {
  if (inst.graph.non_sink_count() > cfg.max_non_sinks)
    throw BudgetExceeded("oracle limited to " +
                         std::to_string(cfg.max_non_sinks) + " non-sinks");
  oracle_detail::Enumerator e(inst.graph, inst.lambda);
  if (!e.run(0)) return std::nullopt;
  return DelegationSolution{std::move(e.choice)};
}

struct OptimizeResult {
  Weight lambda_star = 0;
  DelegationSolution solution;
};

// Minimum achievable cap. Implemented as a feasibility scan (is any
// resolving assignment possible at all?) followed by a binary search over
// lambda with the pruned enumeration, which yields the same answer and the
// same lexicographically-first witness as scanning every assignment.
inline std::optional<OptimizeResult> brute_force_optimize(
    const DelegationGraph& g, const OracleConfig& cfg = {}) {
  if (g.non_sink_count() > cfg.max_non_sinks)
    throw BudgetExceeded("oracle limited to " +
                         std::to_string(cfg.max_non_sinks) + " non-sinks");
  if (g.n() == 0) return OptimizeResult{0, {}};

  const Weight total = g.total_weight();
  Instance probe{g, total};
  auto any = brute_force_decide(probe, cfg);
  if (!any) return std::nullopt;

  const int t = g.sink_count();
  Weight lo = (total + t - 1) / t;  // loads partition the total weight
  Weight hi = total;
  DelegationSolution witness = *any;
  while (lo < hi) {
    Weight mid = lo + (hi - lo) / 2;
    probe.lambda = mid;
    if (auto sol = brute_force_decide(probe, cfg)) {
      witness = *sol;
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  probe.lambda = lo;
  if (auto sol = brute_force_decide(probe, cfg)) witness = *sol;
  return OptimizeResult{lo, std::move(witness)};
}

}  // namespace rd
