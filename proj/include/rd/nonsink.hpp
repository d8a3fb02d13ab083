#pragma once

// Decision solver parameterized by the number of non-sink vertices.
//
// Every search node runs the kernel check and the reduction rules to a
// fixpoint, then branches on a vertex v whose out-degree exceeds 2(k-1):
// each subset S of v's in-neighbors yields a child where members of S keep
// only their edge to v and the rest drop theirs. Once no such vertex
// remains, every non-sink has out-degree at most 2(k-1) and the leaf is
// solved by pruned enumeration. Leaf witnesses are lifted back onto the
// original instance; if re-inserting a deferred vertex would overflow a
// sink, the search restarts with that vertex excluded from deferral and
// branched on its out-edges instead.

#include <atomic>
#include <future>

#include "rd/core.hpp"
#include "rd/reduce.hpp"
#include "rd/stats.hpp"

namespace rd {

struct NonsinkConfig {
  std::uint64_t node_budget = 5'000'000;
  // When > 1, children of a branch node are explored via std::async (one
  // fan-out level). The answer matches the sequential run; stats totals may
  // include sibling work a sequential run would have skipped.
  int concurrency = 1;
};

namespace nonsink_detail {

enum class Status { Yes, No, Fail };

struct NodeResult {
  Status st = Status::No;
  DelegationSolution sol;
  VertexId fail_vertex = 0;
};

struct Ctx {
  const Instance& original;
  std::set<VertexId> original_sinks;
  const NonsinkConfig& cfg;
  std::set<VertexId> no_defer;
  std::atomic<std::uint64_t> nodes{0};
};

// Pruned lexicographic enumeration over the current (reduced) graph.
// Deferred weights are absent here; lift re-checks them. Enumeration steps
// are charged against the shared node budget so a wide leaf cannot run off.
struct LeafEnumerator {
  const DelegationGraph& g;
  Weight lambda;
  std::atomic<std::uint64_t>& steps;
  std::uint64_t step_budget;
  std::vector<VertexId> order;
  std::map<VertexId, VertexId> choice;

  LeafEnumerator(const DelegationGraph& graph, Weight l,
                 std::atomic<std::uint64_t>& counter, std::uint64_t budget)
      : g(graph), lambda(l), steps(counter), step_budget(budget),
        order(graph.non_sinks()) {}

  bool loads_ok() const {
    std::map<VertexId, Weight> loads;
    for (VertexId t : g.sinks()) loads[t] = g.weight(t);
    std::map<VertexId, VertexId> memo;  // 0 = dangling
    for (const auto& [start, _] : choice) {
      if (memo.count(start)) continue;
      std::vector<VertexId> path;  // assigned vertices only
      std::set<VertexId> seen;
      VertexId cur = start, result = 0;
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
        if (!seen.insert(cur).second) return false;  // cycle
        path.push_back(cur);
        cur = it->second;
      }
      for (VertexId v : path) memo[v] = result;
    }
    for (const auto& [v, t] : memo)
      if (t != 0) loads[t] += g.weight(v);
    for (const auto& [_, l] : loads)
      if (l > lambda) return false;
    return true;
  }

  bool run(std::size_t depth) {
    if (++steps > step_budget)
      throw BudgetExceeded("nonsink solver exceeded node budget");
    if (!loads_ok()) return false;
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

inline NodeResult search(Ctx& ctx, DelegationGraph g, ReductionTrace trace,
                         SolverStats& stats, bool allow_async);

inline NodeResult run_children(Ctx& ctx,
                               std::vector<DelegationGraph>&& children,
                               const ReductionTrace& trace, SolverStats& stats,
                               bool allow_async) {
  constexpr std::size_t kAsyncCap = 32;
  if (allow_async && ctx.cfg.concurrency > 1 && children.size() > 1 &&
      children.size() <= kAsyncCap) {
    std::vector<SolverStats> child_stats(children.size());
    std::vector<std::future<NodeResult>> futs;
    futs.reserve(children.size());
    for (std::size_t i = 0; i < children.size(); ++i) {
      futs.push_back(std::async(
          std::launch::async,
          [&ctx, &child_stats, i, child = std::move(children[i]),
           trace]() mutable {
            return search(ctx, std::move(child), std::move(trace),
                          child_stats[i], false);
          }));
    }
    NodeResult picked;
    bool have = false;
    std::exception_ptr err;
    for (std::size_t i = 0; i < futs.size(); ++i) {
      try {
        NodeResult r = futs[i].get();
        if (!have && r.st != Status::No) {
          picked = std::move(r);
          have = true;
        }
      } catch (...) {
        if (!err) err = std::current_exception();
      }
    }
    for (const SolverStats& cs : child_stats) stats.merge(cs);
    if (err) std::rethrow_exception(err);
    return have ? picked : NodeResult{};
  }
  for (auto& child : children) {
    NodeResult r = search(ctx, std::move(child), trace, stats, allow_async);
    if (r.st != Status::No) return r;
  }
  return {};
}

inline NodeResult search(Ctx& ctx, DelegationGraph g, ReductionTrace trace,
                         SolverStats& stats, bool allow_async) {
  if (++ctx.nodes > ctx.cfg.node_budget)
    throw BudgetExceeded("nonsink solver exceeded node budget");
  ++stats.nodes_explored;

  const Weight lambda = ctx.original.lambda;
  if (!kernel_check(g, lambda)) {
    stats.count("kernel-reject");
    return {};
  }

  for (;;) {
    int c1 = contract_forced_inplace(g, trace);
    if (c1) stats.count("contract", c1);
    int c2 = strip_self_loops_inplace(g, trace);
    if (c2) stats.count("strip-self-loop", c2);
    // a vertex stripped down to out-degree 0 that was not a sink of the
    // original instance can never delegate: this branch is infeasible
    for (VertexId v : g.sinks())
      if (!ctx.original_sinks.count(v)) return {};
    int c3 = defer_sources_inplace(g, trace, ctx.no_defer);
    if (c3) stats.count("defer", c3);
    if (c1 + c2 + c3 == 0) break;
  }

  const int k = g.non_sink_count();

  if (k > 0) {
    // Fallback for vertices whose deferral failed at lift time: branch on
    // each remaining out-edge directly.
    for (VertexId v : g.non_sinks()) {
      if (!ctx.no_defer.count(v)) continue;
      if (g.in_degree(v) != 0 || g.out_degree(v) <= 2 * (k - 1)) continue;
      stats.count("branch-single");
      std::vector<DelegationGraph> children;
      for (VertexId w : g.out_neighbors(v)) {
        DelegationGraph child = g;
        for (VertexId x : g.out_neighbors(v))
          if (x != w) child.remove_edge(v, x);
        children.push_back(std::move(child));
      }
      return run_children(ctx, std::move(children), trace, stats, allow_async);
    }

    // Subset branching on the in-neighbors of a wide vertex.
    for (VertexId v : g.non_sinks()) {
      if (g.out_degree(v) <= 2 * (k - 1)) continue;
      stats.count("branch-subset");
      const std::vector<VertexId> ins(g.in_neighbors(v).begin(),
                                      g.in_neighbors(v).end());
      if (ins.empty())
        throw std::logic_error("wide source survived the deferral rule");
      std::vector<DelegationGraph> children;
      // subsets by increasing size, then lexicographic on member indices
      const std::size_t kk = ins.size();
      std::vector<std::size_t> comb;
      auto emit = [&]() {
        DelegationGraph child = g;
        std::set<VertexId> chosen;
        for (std::size_t idx : comb) chosen.insert(ins[idx]);
        bool feasible = true;
        for (VertexId u : ins) {
          if (chosen.count(u)) {
            for (VertexId x : g.out_neighbors(u))
              if (x != v) child.remove_edge(u, x);
          } else {
            child.remove_edge(u, v);
            if (child.out_degree(u) == 0) feasible = false;
          }
        }
        if (feasible) children.push_back(std::move(child));
      };
      auto next_comb = [&]() {
        const std::size_t size = comb.size();
        for (std::size_t i = size; i-- > 0;) {
          if (comb[i] < i + kk - size) {
            ++comb[i];
            for (std::size_t j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
            return true;
          }
        }
        return false;
      };
      for (std::size_t size = 0; size <= kk; ++size) {
        comb.resize(size);
        for (std::size_t i = 0; i < size; ++i) comb[i] = i;
        do {
          emit();
        } while (next_comb());
      }
      return run_children(ctx, std::move(children), trace, stats, allow_async);
    }
  }

  // Leaf: every non-sink now has out-degree at most 2(k-1).
  ++stats.leaf_enumerations;
  LeafEnumerator leaf(g, lambda, ctx.nodes, ctx.cfg.node_budget);
  if (!leaf.run(0)) return {};
  LiftResult lifted =
      lift(trace, DelegationSolution{std::move(leaf.choice)}, ctx.original);
  if (!lifted.ok()) return {Status::Fail, {}, lifted.failed_vertex};
  return {Status::Yes, std::move(*lifted.solution), 0};
}

}  // namespace nonsink_detail

inline DecideOutcome solve_nonsink(const Instance& inst,
                                   const NonsinkConfig& cfg = {}) {
  nonsink_detail::Ctx ctx{inst, {}, cfg, {}, {}};
  for (VertexId t : inst.graph.sinks()) ctx.original_sinks.insert(t);
  SolverStats stats;
  for (;;) {
    nonsink_detail::NodeResult r = nonsink_detail::search(
        ctx, inst.graph, {}, stats, cfg.concurrency > 1);
    if (r.st == nonsink_detail::Status::Fail) {
      if (!ctx.no_defer.insert(r.fail_vertex).second)
        throw std::logic_error("lift failed on a vertex already excluded "
                               "from deferral");
      stats.count("defer-fallback");
      continue;
    }
    if (r.st == nonsink_detail::Status::Yes)
      return {std::move(r.sol), std::move(stats)};
    return {std::nullopt, std::move(stats)};
  }
}

}  // namespace rd
