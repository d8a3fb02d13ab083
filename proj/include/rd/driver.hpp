#pragma once

// Solver dispatch and the optimization driver (binary search over the cap
// using any decision solver).

#include <optional>
#include <utility>

#include "rd/core.hpp"
#include "rd/edges.hpp"
#include "rd/nonsink.hpp"
#include "rd/oracle.hpp"

namespace rd {

enum class Algo { Oracle, Nonsink, Edges, Auto };

struct SolverConfigs {
  OracleConfig oracle;
  NonsinkConfig nonsink;
  EdgesConfig edges;
  // `auto` thresholds: the edges solver when its parameter is small enough,
  // otherwise the non-sink solver while the non-sink count stays moderate,
  // otherwise the oracle.
  int auto_edge_parameter_limit = 20;
  int auto_non_sink_limit = 25;
};

inline Algo resolve_auto(const DelegationGraph& g, const SolverConfigs& cfg) {
  if (edge_parameter(g) <= cfg.auto_edge_parameter_limit) return Algo::Edges;
  if (g.non_sink_count() <= cfg.auto_non_sink_limit) return Algo::Nonsink;
  return Algo::Oracle;
}

inline DecideOutcome decide_with(Algo algo, const Instance& inst,
                                 const SolverConfigs& cfg = {}) {
  if (algo == Algo::Auto) algo = resolve_auto(inst.graph, cfg);
  switch (algo) {
    case Algo::Nonsink:
      return solve_nonsink(inst, cfg.nonsink);
    case Algo::Edges:
      return solve_edges(inst, cfg.edges);
    default: {
      DecideOutcome out;
      out.solution = brute_force_decide(inst, cfg.oracle);
      return out;
    }
  }
}

struct OptimizeOutcome {
  Weight lambda_star = 0;
  DelegationSolution solution;
  SolverStats stats;
};

// Least cap for which the chosen decision solver answers yes. Sink loads
// partition the total weight, so ceil(W / |T|) bounds the search below.
inline std::optional<OptimizeOutcome> optimize_driver(
    const DelegationGraph& g, Algo algo, const SolverConfigs& cfg = {}) {
  OptimizeOutcome out;
  if (g.n() == 0) return out;  // nothing to resolve, cap 0

  const Weight total = g.total_weight();
  Instance probe{g, total};
  DecideOutcome top = decide_with(algo, probe, cfg);
  out.stats.merge(top.stats);
  if (!top.yes()) return std::nullopt;

  const int t = g.sink_count();
  Weight lo = (total + t - 1) / t;
  Weight hi = total;
  out.solution = *top.solution;
  while (lo < hi) {
    Weight mid = lo + (hi - lo) / 2;
    probe.lambda = mid;
    DecideOutcome r = decide_with(algo, probe, cfg);
    out.stats.merge(r.stats);
    if (r.yes()) {
      out.solution = std::move(*r.solution);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  probe.lambda = lo;
  DecideOutcome last = decide_with(algo, probe, cfg);
  out.stats.merge(last.stats);
  if (last.yes()) out.solution = std::move(*last.solution);
  out.lambda_star = lo;
  return out;
}

}  // namespace rd
